use super::prime::{primality, small_primes, PrimalityMethod};
use crate::error::{Error, Result};
use crate::serde_num;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Seed of the generator that picks rho polynomial constants and start points.
pub const RHO_SEED: u64 = 0x5eed_0f_a9_011c;

/// Default step budget for [`factorize`].
pub const DEFAULT_EFFORT: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    #[serde(with = "serde_num::int")]
    pub prime: BigInt,
    pub exponent: u32,
}

/// Canonical decomposition `sign * prod(prime^exponent)` of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerFactorization {
    pub sign: i8,
    pub factors: Vec<PrimePower>,
    /// Weakest primality method used for the listed primes.
    pub method: PrimalityMethod,
}

impl std::fmt::Display for IntegerFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", pp.prime)?;
            if pp.exponent > 1 {
                write!(f, "^{}", pp.exponent)?;
            }
        }
        Ok(())
    }
}

impl IntegerFactorization {
    pub fn value(&self) -> BigInt {
        let mut v = self.abs_value();
        if self.sign < 0 {
            v = -v;
        }
        v
    }

    pub fn abs_value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, pp| acc * pp.prime.pow(pp.exponent))
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|pp| &pp.prime == p)
            .map_or(0, |pp| pp.exponent)
    }

    /// Structural check: primes ascending, pass primality, exponents positive.
    pub fn is_canonical(&self) -> bool {
        (self.sign == 1 || self.sign == -1)
            && self.factors.iter().all(|pp| pp.exponent >= 1 && primality(&pp.prime).0)
            && self.factors.windows(2).all(|w| w[0].prime < w[1].prime)
    }
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self, n: &BigInt) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(format!(
                "factorization of {n} needs more than {} steps",
                self.limit
            )))
        } else {
            Ok(())
        }
    }
}

/// Factors a nonzero integer by trial division followed by Brent's rho variant
/// with a fixed seed. `effort` bounds the total number of division and rho steps.
pub fn factorize(n: &BigInt, effort: u64) -> Result<IntegerFactorization> {
    if n.is_zero() {
        return Err(Error::PreconditionViolated("cannot factor 0".into()));
    }
    if effort == 0 {
        return Err(Error::PreconditionViolated("effort must be positive".into()));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = n.abs();
    let mut budget = Budget { used: 0, limit: effort };
    let mut found: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut method = PrimalityMethod::TrialDivision;

    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        budget.spend(n)?;
        while (&rest % p).is_zero() {
            rest /= p;
            *found.entry(pb.clone()).or_insert(0) += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        let (prime, how) = primality(&m);
        if prime {
            method = method.max(how);
            *found.entry(m).or_insert(0) += 1;
            continue;
        }
        if let Some((root, k)) = perfect_power(&m) {
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        let d = brent_rho(&m, &mut rng, &mut budget, n)?;
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }

    let factors = found
        .into_iter()
        .map(|(prime, exponent)| PrimePower { prime, exponent })
        .collect();
    Ok(IntegerFactorization { sign, factors, method })
}

fn perfect_power(m: &BigInt) -> Option<(BigInt, u32)> {
    let bits = m.bits() as u32;
    for k in (2..=bits).rev() {
        let r = m.nth_root(k);
        if r > BigInt::one() && r.pow(k) == *m {
            return Some((r, k));
        }
    }
    None
}

fn brent_rho(m: &BigInt, rng: &mut ChaCha8Rng, budget: &mut Budget, orig: &BigInt) -> Result<BigInt> {
    let one = BigInt::one();
    loop {
        let c = BigInt::from(rng.gen_range(1u64..u64::MAX)) % m;
        let mut y = BigInt::from(rng.gen_range(0u64..u64::MAX)) % m;
        let step = |x: &BigInt| (x * x + &c) % m;
        let block = 128u64;
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..block.min(r - k) {
                    budget.spend(orig)?;
                    y = step(&y);
                    q = (q * (&x - &y).abs()) % m;
                }
                g = q.gcd(m);
                k += block;
            }
            r *= 2;
        }
        if &g == m {
            loop {
                budget.spend(orig)?;
                ys = step(&ys);
                g = (&x - &ys).abs().gcd(m);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != m {
            return Ok(g);
        }
    }
}
