use super::UniPoly;
use crate::arith::Rat;
use crate::serde_num;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Bisection steps after the Rouché radius is bracketed between two powers of two.
const ROUCHE_REFINE_STEPS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Cauchy,
    Rouche,
    EnestromKakeya,
    /// `a X^n`: every root is zero.
    Monomial,
}

/// Certified upper bound on the largest root modulus `M`.
/// `strict` means `M < value`, otherwise `M <= value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBound {
    #[serde(with = "serde_num::rat")]
    pub value: Rat,
    pub strict: bool,
    pub source: BoundSource,
}

impl RootBound {
    /// Whether the bound proves `M < c`.
    pub fn proves_below(&self, c: &Rat) -> bool {
        if self.strict {
            &self.value <= c
        } else {
            &self.value < c
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoucheSearch {
    /// Every radius tested, in order, with the outcome.
    pub tried: Vec<(Rat, bool)>,
    /// Smallest radius for which the test held.
    pub best: Rat,
}

/// Dyadic search for a small radius passing the Rouché test. `None` for
/// constants and for monomials (whose roots are all zero).
pub fn rouche_search(f: &UniPoly) -> Option<RoucheSearch> {
    let n = f.degree()?;
    if n == 0 || f.coeffs()[..n].iter().all(Zero::is_zero) {
        return None;
    }
    let mut tried = Vec::new();
    let mut test = |r: &Rat| {
        let ok = f.rouche_all_roots_inside(r);
        tried.push((r.clone(), ok));
        ok
    };
    let two = Rat::from_integer(2.into());
    let mut hi = Rat::one();
    let mut lo;
    if test(&hi) {
        loop {
            let half = &hi / &two;
            if !test(&half) {
                lo = half;
                break;
            }
            hi = half;
        }
    } else {
        lo = hi.clone();
        loop {
            hi = &lo * &two;
            if test(&hi) {
                break;
            }
            lo = hi.clone();
        }
    }
    for _ in 0..ROUCHE_REFINE_STEPS {
        let mid = (&lo + &hi) / &two;
        if test(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(RoucheSearch { tried, best: hi })
}

/// Every bound the engine can certify for `f` (degree at least one).
pub fn root_bounds(f: &UniPoly) -> Vec<RootBound> {
    let mut out = vec![RootBound { value: f.cauchy_bound(), strict: true, source: BoundSource::Cauchy }];
    match rouche_search(f) {
        Some(search) => out.push(RootBound {
            value: search.best,
            strict: true,
            source: BoundSource::Rouche,
        }),
        None => out.push(RootBound {
            value: Rat::zero(),
            strict: false,
            source: BoundSource::Monomial,
        }),
    }
    if f.is_enestrom_kakeya() || (-f).is_enestrom_kakeya() {
        out.push(RootBound {
            value: Rat::one(),
            strict: false,
            source: BoundSource::EnestromKakeya,
        });
    }
    out
}

/// The smallest certified bound; a strict bound wins ties.
pub fn best_root_bound(f: &UniPoly) -> RootBound {
    root_bounds(f)
        .into_iter()
        .min_by(|x, y| x.value.cmp(&y.value).then(y.strict.cmp(&x.strict)))
        .expect("cauchy bound always present")
}
