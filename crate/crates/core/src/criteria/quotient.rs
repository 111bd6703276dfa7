use crate::arith::{divisors, factorize, DivisorSet, Int, IntegerFactorization, Rat};
use crate::error::{Error, Result};
use crate::serde_num;
use crate::unipoly::UniPoly;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientKind {
    Admissible,
    Unitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientSource {
    Enumerated,
    /// Forced to one by a factorization pattern; no enumeration happened.
    Pattern,
}

/// Largest quotient `d2/d1 <= sqrt(|f(b)| / |f(a)|)` over the chosen divisor
/// sets, with the pair realizing it (smallest `d1` among ties).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientBound {
    #[serde(with = "serde_num::rat")]
    pub value: Rat,
    #[serde(with = "serde_num::int")]
    pub d1: Int,
    #[serde(with = "serde_num::int")]
    pub d2: Int,
    pub kind: QuotientKind,
    pub source: QuotientSource,
    /// Sizes of the divisor sets of `f(a)` and `f(b)`.
    pub search_space_sizes: (usize, usize),
}

impl QuotientBound {
    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// The pair `(1, 1)` recorded for a pattern-forced `q = 1`.
    pub fn forced_one(kind: QuotientKind) -> Self {
        QuotientBound {
            value: Rat::one(),
            d1: Int::one(),
            d2: Int::one(),
            kind,
            source: QuotientSource::Pattern,
            search_space_sizes: (0, 0),
        }
    }

    /// Witness constraints: `d1 | fa`, `d2 | fb`, `value = d2/d1 >= 1`, `d2^2 |fa| <= d1^2 |fb|`.
    pub fn witness_holds(&self, fa: &Int, fb: &Int) -> bool {
        let (fa, fb) = (fa.abs(), fb.abs());
        self.d1.is_positive()
            && self.d2.is_positive()
            && (&fa % &self.d1).is_zero()
            && (&fb % &self.d2).is_zero()
            && self.value == Rat::new(self.d2.clone(), self.d1.clone())
            && self.value >= Rat::one()
            && &self.d2 * &self.d2 * &fa <= &self.d1 * &self.d1 * &fb
    }
}

/// Maximum of `d2/d1` over ascending divisor lists subject to `d2^2 fa <= d1^2 fb`.
pub fn max_quotient(d1s: &[Int], d2s: &[Int], fa: &Int, fb: &Int) -> (Int, Int) {
    let mut best: Option<(Int, Int)> = None;
    for d1 in d1s {
        let cap = d1 * d1 * fb;
        let idx = d2s.partition_point(|d2| d2 * d2 * fa <= cap);
        if idx == 0 {
            continue;
        }
        let d2 = &d2s[idx - 1];
        let better = match &best {
            None => true,
            Some((b1, b2)) => d2 * b1 > b2 * d1,
        };
        if better {
            best = Some((d1.clone(), d2.clone()));
        }
    }
    best.unwrap_or_else(|| (Int::one(), Int::one()))
}

fn divisor_set(kind: QuotientKind, g: &Int) -> DivisorSet {
    match kind {
        QuotientKind::Admissible => DivisorSet::Admissible(g.clone()),
        QuotientKind::Unitary => DivisorSet::Unitary,
    }
}

/// Quotient bound from the factorizations of `f(a)`, `f(b)` and the gcds
/// `ga = gcd(f(a), f'(a))`, `gb = gcd(f(b), f'(b))`.
pub fn quotient_from_factorizations(
    fact_a: &IntegerFactorization,
    fact_b: &IntegerFactorization,
    ga: &Int,
    gb: &Int,
    kind: QuotientKind,
) -> Result<QuotientBound> {
    let fa = fact_a.abs_value();
    let fb = fact_b.abs_value();
    if fa.is_zero() || fa >= fb {
        return Err(Error::PreconditionViolated(format!(
            "need 0 < |f(a)| < |f(b)|, got {fa} and {fb}"
        )));
    }
    let d1s = divisors(fact_a, &divisor_set(kind, ga))?;
    let d2s = divisors(fact_b, &divisor_set(kind, gb))?;
    let (d1, d2) = max_quotient(&d1s, &d2s, &fa, &fb);
    Ok(QuotientBound {
        value: Rat::new(d2.clone(), d1.clone()),
        d1,
        d2,
        kind,
        source: QuotientSource::Enumerated,
        search_space_sizes: (d1s.len(), d2s.len()),
    })
}

/// `q` (admissible) or `q_u` (unitary) for the pair `(a, b)`.
pub fn compute_quotient_bound(
    f: &UniPoly,
    a: &Int,
    b: &Int,
    kind: QuotientKind,
    effort: u64,
) -> Result<QuotientBound> {
    let fa = f.eval(a);
    let fb = f.eval(b);
    if fa.is_zero() || fa.abs() >= fb.abs() {
        return Err(Error::PreconditionViolated(format!(
            "need 0 < |f(a)| < |f(b)|, got f({a}) = {fa}, f({b}) = {fb}"
        )));
    }
    let df = f.derivative();
    let ga = fa.gcd(&df.eval(a));
    let gb = fb.gcd(&df.eval(b));
    quotient_from_factorizations(&factorize(&fa, effort)?, &factorize(&fb, effort)?, &ga, &gb, kind)
}
