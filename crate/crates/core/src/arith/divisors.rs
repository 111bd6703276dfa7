use super::factor::IntegerFactorization;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Upper limit on the size of any enumerated divisor set.
pub const MAX_DIVISORS: u64 = 1 << 20;

/// Which divisors of `n` to keep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorSet {
    All,
    Unitary,
    /// Admissible divisors relative to `g = gcd(n, f'(a))`; zero imposes no constraint.
    Admissible(BigInt),
}

/// Exponent of `p` in `g`, with `None` standing for an unbounded exponent (`g == 0`).
fn valuation(g: &BigInt, p: &BigInt) -> Option<u32> {
    if g.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut g = g.clone();
    while (&g % p).is_zero() {
        g /= p;
        v += 1;
    }
    Some(v)
}

/// Allowed exponents per prime. For `d = prod p^e`, `gcd(d, n/d)` has exponent
/// `min(e, k - e)` at `p`, so the per-prime constraints are independent.
fn allowed_exponents(f: &IntegerFactorization, set: &DivisorSet) -> Vec<Vec<u32>> {
    f.factors
        .iter()
        .map(|pp| {
            let k = pp.exponent;
            match set {
                DivisorSet::All => (0..=k).collect(),
                DivisorSet::Unitary => vec![0, k],
                DivisorSet::Admissible(g) => {
                    let cap = valuation(g, &pp.prime);
                    (0..=k)
                        .filter(|&e| cap.map_or(true, |c| e.min(k - e) <= c))
                        .collect()
                }
            }
        })
        .collect()
}

/// Ascending list of the positive divisors of `|n|` selected by `set`.
pub fn divisors(f: &IntegerFactorization, set: &DivisorSet) -> Result<Vec<BigInt>> {
    let allowed = allowed_exponents(f, set);
    let count = allowed
        .iter()
        .try_fold(1u64, |acc, a| acc.checked_mul(a.len() as u64))
        .unwrap_or(u64::MAX);
    if count > MAX_DIVISORS {
        return Err(Error::BudgetExceeded(format!(
            "{count} divisors exceed the enumeration limit {MAX_DIVISORS}"
        )));
    }
    let mut out = vec![BigInt::one()];
    for (pp, exps) in f.factors.iter().zip(&allowed) {
        let mut next = Vec::with_capacity(out.len() * exps.len());
        for &e in exps {
            let pe = pp.prime.pow(e);
            next.extend(out.iter().map(|d| d * &pe));
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

pub fn all_divisors(f: &IntegerFactorization) -> Result<Vec<BigInt>> {
    divisors(f, &DivisorSet::All)
}

pub fn unitary_divisors(f: &IntegerFactorization) -> Result<Vec<BigInt>> {
    divisors(f, &DivisorSet::Unitary)
}

/// Divisors `d` of `|n|` with `gcd(d, |n|/d) | g`; `g == 0` means every divisor qualifies.
pub fn admissible_divisors(f: &IntegerFactorization, g: &BigInt) -> Result<Vec<BigInt>> {
    divisors(f, &DivisorSet::Admissible(g.clone()))
}
