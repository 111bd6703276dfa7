//! Polynomials `f(X, Y) = sum a_i(X) Y^i` over a field, and the degree-based
//! irreducibility criteria over `K(X)`.

mod certify;

pub use certify::{certify_bivar, BivarCertificate, BivarOptions, DegreeQuotient};

use crate::arith::{Int, Rat};
use crate::fieldpoly::{Field, Poly};
use std::fmt;

/// `coeffs[i]` is `a_i(X)`; the top entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<F: Field> {
    field: F,
    coeffs: Vec<Poly<F>>,
}

impl<F: Field> BiPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<Poly<F>>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { field, coeffs }
    }

    /// Row `i` holds the coefficients of `a_i(X)` in ascending powers of `X`.
    pub fn from_rows(field: F, rows: &[&[i64]]) -> Self {
        Self::new(field, rows.iter().map(|r| Poly::from_i64(field, r)).collect())
    }

    /// From `(coefficient, deg_X, deg_Y)` terms; repeated monomials add up.
    pub fn from_terms(field: F, terms: &[(Int, usize, usize)]) -> Self {
        let n = terms.iter().map(|t| t.2 + 1).max().unwrap_or(0);
        let mut rows = vec![Poly::zero(field); n];
        for (c, i, j) in terms {
            let mut mono = vec![field.zero(); i + 1];
            mono[*i] = field.from_int(c);
            rows[*j] = rows[*j].add(&Poly::new(field, mono));
        }
        Self::new(field, rows)
    }

    pub fn zero(field: F) -> Self {
        BiPoly { field, coeffs: Vec::new() }
    }

    /// `f(X, Y) = c(X)`, constant in `Y`.
    pub fn from_x(c: Poly<F>) -> Self {
        Self::new(c.field(), vec![c])
    }

    pub fn y(field: F) -> Self {
        Self::new(field, vec![Poly::zero(field), Poly::one(field)])
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn coeffs(&self) -> &[Poly<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly<F> {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest `X`-degree of a coefficient.
    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn leading_y(&self) -> Option<&Poly<F>> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.field, (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![Poly::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.field, out)
    }

    /// `f(X, s(X))`.
    pub fn substitute(&self, s: &Poly<F>) -> Poly<F> {
        self.coeffs.iter().rev().fold(Poly::zero(self.field), |acc, c| acc.mul(s).add(c))
    }

    /// Formal derivative in `Y`.
    pub fn partial_y(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&f.from_int(&Int::from(i))))
                .collect(),
        )
    }

    /// `max_{i<n} (deg a_i - deg a_n) / (n - i)` over the nonzero `a_i`;
    /// `None` stands for minus infinity (every lower coefficient is zero).
    pub fn lambda_bound(&self) -> Option<Rat> {
        let n = self.degree_y()?;
        let top = self.coeffs[n].degree_i64();
        self.coeffs[..n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Rat::new(Int::from(c.degree_i64() - top), Int::from(n - i)))
            .max()
    }

    /// Exact quotient in `K[X][Y]`: each step divides leading coefficients in `K[X]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let m = d.degree_y()?;
        let lead = d.leading_y()?;
        let mut rem = self.clone();
        let mut quot = vec![Poly::zero(self.field); self.coeffs.len().saturating_sub(m)];
        while let Some(k) = rem.degree_y().filter(|&k| k >= m) {
            let t = rem.coeffs[k].div_exact(lead)?;
            let mut shift = vec![Poly::zero(self.field); k - m];
            shift.push(t.clone());
            rem = rem.sub(&Self::new(self.field, shift).mul(d));
            quot[k - m] = t;
        }
        rem.is_zero().then(|| Self::new(self.field, quot))
    }
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field;
        let mut first = true;
        for (j, row) in self.coeffs.iter().enumerate().rev() {
            for (i, c) in row.coeffs().iter().enumerate().rev() {
                if field.is_zero(c) {
                    continue;
                }
                let (neg, text) = field.render(c);
                if neg {
                    f.write_str("-")?;
                } else if !first {
                    f.write_str("+")?;
                }
                first = false;
                if text != "1" || (i == 0 && j == 0) {
                    if text.contains('/') && (i > 0 || j > 0) {
                        write!(f, "({text})")?;
                    } else {
                        f.write_str(&text)?;
                    }
                }
                for (var, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => f.write_str(var)?,
                        _ => write!(f, "{var}^{e}")?,
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
