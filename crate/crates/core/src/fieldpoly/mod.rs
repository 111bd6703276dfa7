//! Polynomials in one variable over Q and over prime fields, with gcd, exact
//! division and complete factorization.

mod divisors;
mod field;
mod gfp;
mod rational;

pub use divisors::{divisor_degrees, DegreeSet, DivisorKind};
pub use field::{Field, PrimeField, Rationals};
pub use gfp::{factor_gfp, FACTOR_SEED};
pub use rational::{eisenstein_check, factor_q, from_integer_poly, to_integer_poly};

use crate::arith::Int;
use crate::unipoly::write_terms;
use std::fmt;

/// Dense polynomial `sum coeffs[i] X^i` over the field `F`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[Int]) -> Self {
        Self::new(field, coeffs.iter().map(|c| field.from_int(c)).collect())
    }

    pub fn from_i64(field: F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(&Int::from(c))).collect())
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `X`.
    pub fn x(field: F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial at `-1`; handy for degree arithmetic.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| self.field.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| self.field.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let f = self.field;
        let dn = d.degree()?;
        let inv = f.inv(d.leading()?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Some((Self::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dn], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(dn);
        Some((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("division by zero polynomial").1
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut u, mut v) = (self.monic(), other.monic());
        while !v.is_zero() {
            let r = u.rem(&v).monic();
            u = v;
            v = r;
        }
        u
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(&f.from_int(&Int::from(i)), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self(s(X))` by Horner's scheme.
    pub fn compose(&self, s: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.field), |acc, c| acc.mul(s).add(&Self::constant(self.field, c.clone())))
    }

    /// Total order used to sort factors: degree, then coefficients from the top.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field;
        write_terms(f, &self.coeffs, "x", |c| {
            (!field.is_zero(c)).then(|| {
                let (neg, text) = field.render(c);
                let unit = text == "1";
                let text = if text.contains('/') { format!("({text})") } else { text };
                (neg, text, unit)
            })
        })
    }
}

/// Fields with a complete factorization routine. Over the rationals the
/// budget caps the Kronecker search; over `GF(p)` it is unused.
pub trait FactorField: Field {
    fn factor(f: &Poly<Self>, budget: u64) -> crate::Result<FieldFactorization<Self>>;
}

impl FactorField for Rationals {
    fn factor(f: &Poly<Self>, budget: u64) -> crate::Result<FieldFactorization<Self>> {
        factor_q(f, budget)
    }
}

impl FactorField for PrimeField {
    fn factor(f: &Poly<Self>, _budget: u64) -> crate::Result<FieldFactorization<Self>> {
        factor_gfp(f)
    }
}

/// Complete factorization `unit * prod factor^exponent` into monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldFactorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> FieldFactorization<F> {
    pub fn expand(&self, field: F) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(field, self.unit.clone()), |acc, (g, e)| acc.mul(&g.pow(*e)))
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// `h^k` with `h` irreducible and `k >= 1`.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// Sort factors by degree then coefficients.
    pub(crate) fn normalize(mut self) -> Self {
        self.factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
        self
    }
}

impl<F: Field> fmt::Display for FieldFactorization<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (g, e) in &self.factors {
            write!(f, " * ({g})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let q = Rationals;
        let u = Poly::from_i64(q, &[-1, 0, 1]);
        let v = Poly::from_i64(q, &[-1, 1]);
        assert_eq!(u.gcd(&v), v);
        assert_eq!(u.gcd(&Poly::zero(q)), u);
        let f2 = gf(2);
        let g = Poly::from_i64(f2, &[1, 0, 1]).gcd(&Poly::from_i64(f2, &[0, 1, 1]));
        assert_eq!(g, Poly::from_i64(f2, &[1, 1]));
        let w = Poly::from_i64(q, &[0, 2]);
        assert_eq!(w.gcd(&Poly::zero(q)).to_string(), "x");
    }

    #[test]
    fn compose_and_display() {
        let q = Rationals;
        let f = Poly::from_i64(q, &[1, 0, 1]);
        let s = Poly::from_i64(q, &[1, 1]);
        assert_eq!(f.compose(&s), Poly::from_i64(q, &[2, 2, 1]));
        let h = Poly::new(q, vec![crate::arith::rat(1, 2), crate::arith::rat(-3, 1)]);
        assert_eq!(h.to_string(), "-3x+(1/2)");
        let g = Poly::from_i64(gf(5), &[-1, 0, 1]);
        assert_eq!(g.to_string(), "x^2+4");
    }

    fn small(field: PrimeField) -> impl Strategy<Value = Poly<PrimeField>> {
        prop::collection::vec(0i64..7, 0..6).prop_map(move |c| Poly::from_i64(field, &c))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(u in small(gf(7)), v in small(gf(7))) {
            let g = u.gcd(&v);
            if u.is_zero() && v.is_zero() {
                prop_assert!(g.is_zero());
            } else {
                prop_assert!(g.leading() == Some(&1));
                prop_assert!(g.divides(&u) && g.divides(&v));
            }
        }

        #[test]
        fn divrem_reconstructs(u in small(gf(7)), v in small(gf(7))) {
            prop_assume!(!v.is_zero());
            let (q, r) = u.divrem(&v).unwrap();
            prop_assert_eq!(q.mul(&v).add(&r), u);
            prop_assert!(r.degree_i64() < v.degree_i64());
        }
    }
}
