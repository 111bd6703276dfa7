use super::{Field, FieldFactorization, Poly};
use crate::arith::MAX_DIVISORS;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Which divisors of a factored polynomial `F` to keep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorKind<F: Field> {
    /// Keep `d` with `gcd(d, F/d) | G`; `G = 0` keeps every divisor.
    Admissible(Poly<F>),
    /// Keep `d` with `gcd(d, F/d) = 1`.
    Unitary,
}

/// Degrees of the kept divisors, each with one exponent vector realizing it
/// (indexed like the factor list of the factorization).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSet {
    pub witnesses: BTreeMap<usize, Vec<u32>>,
    /// Number of exponent vectors that were admitted.
    pub count: u64,
}

impl DegreeSet {
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.witnesses.keys().copied()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.witnesses.contains_key(&d)
    }
}

fn multiplicity<F: Field>(h: &Poly<F>, g: &Poly<F>) -> Option<u32> {
    if g.is_zero() {
        return None;
    }
    let mut g = g.clone();
    let mut k = 0;
    while let Some(q) = g.div_exact(h) {
        g = q;
        k += 1;
    }
    Some(k)
}

/// Degree set of the divisors of `F` selected by `kind`.
///
/// A divisor `prod h_j^e_j` has `gcd(d, F/d) = prod h_j^min(e_j, k_j - e_j)`, so
/// the admissibility test is per irreducible factor.
pub fn divisor_degrees<F: Field>(fac: &FieldFactorization<F>, kind: &DivisorKind<F>) -> Result<DegreeSet> {
    let allowed: Vec<Vec<u32>> = fac
        .factors
        .iter()
        .map(|(h, k)| match kind {
            DivisorKind::Unitary => vec![0, *k],
            DivisorKind::Admissible(g) => {
                let v = multiplicity(h, g);
                (0..=*k).filter(|e| v.map_or(true, |v| (*e).min(k - e) <= v)).collect()
            }
        })
        .collect();
    let mut count: u64 = 1;
    for a in &allowed {
        count = count.saturating_mul(a.len() as u64);
        if count > MAX_DIVISORS {
            return Err(Error::BudgetExceeded(format!(
                "more than {MAX_DIVISORS} divisor exponent vectors"
            )));
        }
    }
    let mut witnesses: BTreeMap<usize, Vec<u32>> = BTreeMap::from([(0, Vec::new())]);
    for ((h, _), exps) in fac.factors.iter().zip(&allowed) {
        let deg = h.degree().expect("irreducible factors are nonconstant");
        let mut next = BTreeMap::new();
        for (d, w) in &witnesses {
            for &e in exps {
                next.entry(d + deg * e as usize).or_insert_with(|| {
                    let mut w = w.clone();
                    w.push(e);
                    w
                });
            }
        }
        witnesses = next;
    }
    Ok(DegreeSet { witnesses, count })
}
