use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Primes below this bound are found by trial division in [`super::factorize`].
pub(crate) const TRIAL_BOUND: u32 = 1 << 12;

/// The first thirteen primes are a deterministic Miller-Rabin witness set below
/// 3,317,044,064,679,887,385,961,981.
const DETERMINISTIC_WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";
const EXTRA_WITNESSES: [u32; 24] = [
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139,
    149, 151, 157,
];

/// How a primality verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimalityMethod {
    TrialDivision,
    DeterministicMillerRabin,
    /// Strong probable prime to every base in the extended witness list.
    MillerRabinRounds(u32),
}

pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

fn deterministic_limit() -> &'static BigInt {
    static LIMIT: OnceLock<BigInt> = OnceLock::new();
    LIMIT.get_or_init(|| DETERMINISTIC_LIMIT.parse().unwrap())
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).0
}

/// Primality verdict together with the method that produced it.
pub fn primality(n: &BigInt) -> (bool, PrimalityMethod) {
    if n < &BigInt::from(2) {
        return (false, PrimalityMethod::TrialDivision);
    }
    if let Some(small) = n.to_u64() {
        if small <= u64::from(TRIAL_BOUND) * u64::from(TRIAL_BOUND) {
            let prime = small_primes()
                .iter()
                .take_while(|&&p| u64::from(p) * u64::from(p) <= small)
                .all(|&p| small % u64::from(p) != 0);
            return (prime, PrimalityMethod::TrialDivision);
        }
    }
    for &p in &small_primes()[..50] {
        if (n % p).is_zero() {
            return (false, PrimalityMethod::TrialDivision);
        }
    }
    let strong = DETERMINISTIC_WITNESSES.iter().all(|&w| strong_probable_prime(n, w));
    if n < deterministic_limit() {
        return (strong, PrimalityMethod::DeterministicMillerRabin);
    }
    let rounds = (DETERMINISTIC_WITNESSES.len() + EXTRA_WITNESSES.len()) as u32;
    let prime = strong && EXTRA_WITNESSES.iter().all(|&w| strong_probable_prime(n, w));
    (prime, PrimalityMethod::MillerRabinRounds(rounds))
}

fn strong_probable_prime(n: &BigInt, base: u32) -> bool {
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let mut x = BigInt::from(base).modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(is_prime(&BigInt::from(127)));
        assert!(!is_prime(&BigInt::from(16129)));
        assert!(!is_prime(&BigInt::from(3029)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(-7)));
        assert!(is_prime(&BigInt::from(2)));
    }

    #[test]
    fn agrees_with_sieve_below_bound() {
        let primes = small_primes();
        for n in 0..TRIAL_BOUND {
            assert_eq!(is_prime(&BigInt::from(n)), primes.binary_search(&n).is_ok(), "{n}");
        }
    }

    #[test]
    fn large_values() {
        // 2^61 - 1 and 2^89 - 1 are Mersenne primes.
        let m61 = (BigInt::one() << 61) - 1;
        assert_eq!(primality(&m61), (true, PrimalityMethod::DeterministicMillerRabin));
        let m89 = (BigInt::one() << 89) - 1;
        assert_eq!(primality(&m89), (true, PrimalityMethod::MillerRabinRounds(37)));
        // strong pseudoprime to bases 2..37
        let psp: BigInt = "318665857834031151167461".parse().unwrap();
        assert!(!is_prime(&psp));
        assert!(!is_prime(&(&m61 * &m61)));
    }
}
