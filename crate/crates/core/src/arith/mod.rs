//! Exact integer arithmetic: factorization, primality and the divisor sets
//! (all, unitary, admissible) that the irreducibility criteria quantify over.
//!
//! Integers and rationals are `num-bigint`/`num-rational` values; every
//! divisor set holds positive integers only.

mod divisors;
mod factor;
mod prime;

pub use divisors::{
    admissible_divisors, all_divisors, divisors, unitary_divisors, DivisorSet, MAX_DIVISORS,
};
pub use factor::{factorize, IntegerFactorization, PrimePower, DEFAULT_EFFORT, RHO_SEED};
pub use prime::{is_prime, primality, PrimalityMethod};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}
