//! Dense integer polynomials in one variable and the exact root-location
//! tests used by the criteria: Rouché radius, Cauchy bound, Eneström–Kakeya,
//! and the Routh–Hurwitz table on shifted polynomials.

mod bounds;
mod routh;

pub use bounds::{best_root_bound, root_bounds, rouche_search, BoundSource, RootBound, RoucheSearch};
pub use routh::{routh_hurwitz, routh_table, RouthTable, Stability};

use crate::arith::{all_divisors, factorize, Int, Rat, DEFAULT_EFFORT};
use crate::error::{Error, Result};
use crate::serde_num;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `coeffs[i]` is the coefficient of `X^i`; no trailing zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly {
    #[serde(with = "serde_num::int_vec")]
    coeffs: Vec<Int>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Int) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `X - r`.
    pub fn linear_root(r: &Int) -> Self {
        Self::new(vec![-r, Int::one()])
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Int) -> Int {
        self.coeffs
            .iter()
            .rev()
            .fold(Int::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient, and the signed content
    /// it was divided by.
    pub fn primitive_part(&self) -> (Int, Self) {
        if self.is_zero() {
            return (Int::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        (c.clone(), Self::new(self.coeffs.iter().map(|x| x / &c).collect()))
    }

    /// Quotient `self / divisor` when the division is exact in `Z[X]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = divisor.leading().unwrap();
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// All rational roots, ascending, without multiplicity.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(Error::PreconditionViolated("zero polynomial has every root".into()));
        }
        let mut roots = Vec::new();
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(Rat::zero());
        }
        let core = Self::new(self.coeffs[low..].to_vec());
        if core.degree() == Some(0) {
            return Ok(roots);
        }
        let (_, core) = core.primitive_part();
        let n = core.degree().unwrap();
        let nums = all_divisors(&factorize(&core.coeffs[0], DEFAULT_EFFORT)?)?;
        let dens = all_divisors(&factorize(core.leading().unwrap(), DEFAULT_EFFORT)?)?;
        for v in &dens {
            for u in &nums {
                if !u.gcd(v).is_one() {
                    continue;
                }
                for u in [u.clone(), -u] {
                    // v^n f(u/v) = sum a_i u^i v^(n-i)
                    let mut acc = Int::zero();
                    let mut upow = Int::one();
                    let mut vpows = vec![Int::one(); n + 1];
                    for i in 1..=n {
                        vpows[i] = &vpows[i - 1] * v;
                    }
                    for (i, c) in core.coeffs.iter().enumerate() {
                        acc += c * &upow * &vpows[n - i];
                        upow *= &u;
                    }
                    if acc.is_zero() {
                        roots.push(Rat::new(u, v.clone()));
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// Rouché test on `|z| = R`: `|a_n| R^n > sum_{i<n} |a_i| R^i` forces every
    /// root into the open disk `|z| < R`.
    pub fn rouche_all_roots_inside(&self, radius: &Rat) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 || !radius.is_positive() {
            return false;
        }
        let (lead, rest) = self.rouche_sides(radius);
        lead > rest
    }

    /// Both sides of the Rouché inequality at `radius`.
    pub fn rouche_sides(&self, radius: &Rat) -> (Rat, Rat) {
        let n = self.degree().unwrap_or(0);
        let mut pow = Rat::one();
        let mut rest = Rat::zero();
        for c in &self.coeffs[..n] {
            rest += &pow * Rat::from_integer(c.abs());
            pow *= radius;
        }
        (pow * Rat::from_integer(self.coeffs[n].abs()), rest)
    }

    /// `|a_n| > 2|a_{n-1}| + 4|a_{n-2}| + ... + 2^n |a_0|`, i.e. all roots in `|z| < 1/2`.
    pub fn coro2_condition(&self) -> bool {
        let (lead, rest) = self.coro2_sides();
        self.degree().unwrap_or(0) >= 1 && lead > rest
    }

    pub fn coro2_sides(&self) -> (Int, Int) {
        let n = self.degree().unwrap_or(0);
        let rest = (0..n).fold(Int::zero(), |acc, i| {
            acc + (Int::one() << (n - i)) * self.coeffs[i].abs()
        });
        (self.coeffs.get(n).map(|c| c.abs()).unwrap_or_default(), rest)
    }

    /// `1 + max_{i<n} |a_i| / |a_n|`, a strict upper bound on every root modulus.
    pub fn cauchy_bound(&self) -> Rat {
        let n = self.degree().unwrap_or(0);
        let h = self.coeffs[..n].iter().map(|c| c.abs()).max().unwrap_or_default();
        Rat::one() + Rat::new(h, self.coeffs[n].abs())
    }

    /// `0 <= a_0 <= a_1 <= ... <= a_n`; such polynomials have all roots in `|z| <= 1`.
    pub fn is_enestrom_kakeya(&self) -> bool {
        !self.is_zero()
            && !self.coeffs[0].is_negative()
            && self.coeffs.windows(2).all(|w| w[0] <= w[1])
    }

    /// `f(X + c)` by repeated synthetic division.
    pub fn shift(&self, c: &Rat) -> RatPoly {
        let mut a: Vec<Rat> = self.coeffs.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        RatPoly::new(a)
    }

    /// `X^n f(1/X)`.
    pub fn reciprocal(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => {
                Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
            }
            _ => Err(Error::ZeroConstantTerm),
        }
    }

    /// `f(-X)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

pub(crate) fn write_terms<T, F>(f: &mut fmt::Formatter<'_>, coeffs: &[T], var: &str, split: F) -> fmt::Result
where
    F: Fn(&T) -> Option<(bool, String, bool)>,
{
    // split returns (negative, magnitude text, magnitude is one)
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        let Some((neg, mag, unit)) = split(c) else { continue };
        if neg {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        if i == 0 || !unit {
            f.write_str(&mag)?;
        }
        match i {
            0 => {}
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{i}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x", |c| {
            (!c.is_zero()).then(|| (c.is_negative(), c.abs().to_string(), c.abs().is_one()))
        })
    }
}

/// Rational-coefficient polynomial; produced by shifting by a rational center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatPoly {
    #[serde(with = "serde_num::rat_vec")]
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `g(-X)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Integer multiple with the same roots (multiplies through by the lcm of denominators).
    pub fn clear_denominators(&self) -> UniPoly {
        let l = self.coeffs.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
                .collect(),
        )
    }
}

impl From<&UniPoly> for RatPoly {
    fn from(p: &UniPoly) -> Self {
        RatPoly::new(p.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x", |c| {
            (!c.is_zero()).then(|| {
                let m = c.abs();
                let text = if m.is_integer() { m.to_string() } else { format!("({m})") };
                (c.is_negative(), text, m.is_one())
            })
        })
    }
}
