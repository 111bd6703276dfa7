use super::RatPoly;
use crate::arith::Rat;
use crate::fieldpoly::{Poly, Rationals};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    /// Every root has negative real part.
    Stable,
    /// Some root has positive real part.
    NotStable,
    /// A zero pivot appeared and some root lies on the imaginary axis; no
    /// perturbation is attempted.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouthTable {
    /// First column, stopping at the first zero pivot.
    pub first_column: Vec<Rat>,
    pub sign_changes: usize,
    pub degenerate: bool,
}

pub fn routh_table(f: &RatPoly) -> RouthTable {
    let Some(n) = f.degree() else {
        return RouthTable { first_column: Vec::new(), sign_changes: 0, degenerate: true };
    };
    let width = n / 2 + 1;
    let row = |start: usize| -> Vec<Rat> {
        (0..width)
            .map(|j| {
                // coefficients a_{n-start}, a_{n-start-2}, ...
                n.checked_sub(start + 2 * j)
                    .map_or_else(Rat::zero, |i| f.coeffs()[i].clone())
            })
            .collect()
    };
    let mut prev = row(0);
    let mut cur = row(1);
    let mut first_column = vec![prev[0].clone()];
    let mut degenerate = false;
    for _ in 1..=n {
        if cur[0].is_zero() {
            degenerate = true;
            first_column.push(cur[0].clone());
            break;
        }
        first_column.push(cur[0].clone());
        let next: Vec<Rat> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_else(Rat::zero);
                let b = cur.get(j + 1).cloned().unwrap_or_else(Rat::zero);
                (&cur[0] * a - &prev[0] * b) / &cur[0]
            })
            .collect();
        prev = cur;
        cur = next;
    }
    let sign_changes = first_column
        .windows(2)
        .filter(|w| !w[0].is_zero() && !w[1].is_zero() && w[0].is_positive() != w[1].is_positive())
        .count();
    RouthTable { first_column, sign_changes, degenerate }
}

/// Exact Routh–Hurwitz classification.
///
/// A coefficient of sign opposite to the leading one already proves a root
/// with positive real part: products of factors `X + c` and `X^2 + pX + q`
/// with `c, p >= 0`, `q > 0` have no negative coefficients. Degenerate tables
/// prove instability too, so they are resolved exactly by asking whether
/// `f` has a root on the imaginary axis; only then is the answer inconclusive.
pub fn routh_hurwitz(f: &RatPoly) -> Stability {
    let Some(n) = f.degree().filter(|&n| n > 0) else {
        return Stability::Inconclusive;
    };
    let lead_positive = f.coeffs()[n].is_positive();
    if f.coeffs().iter().any(|c| !c.is_zero() && c.is_positive() != lead_positive) {
        return Stability::NotStable;
    }
    let table = routh_table(f);
    if table.degenerate {
        if has_imaginary_axis_root(f) {
            Stability::Inconclusive
        } else {
            Stability::NotStable
        }
    } else if table.sign_changes == 0 {
        Stability::Stable
    } else {
        Stability::NotStable
    }
}

/// Whether `f(iy) = 0` for some real `y`: the real and imaginary parts of
/// `f(iy)` share a real root.
fn has_imaginary_axis_root(f: &RatPoly) -> bool {
    let (mut re, mut im) = (Vec::new(), Vec::new());
    for (k, c) in f.coeffs().iter().enumerate() {
        let signed = if (k / 2) % 2 == 0 { c.clone() } else { -c };
        let (target, other) = if k % 2 == 0 { (&mut re, &mut im) } else { (&mut im, &mut re) };
        target.push(signed);
        other.push(Rat::zero());
    }
    let g = Poly::new(Rationals, re).gcd(&Poly::new(Rationals, im));
    g.degree().is_some_and(|d| d > 0) && real_root_count(&g) > 0
}

/// Distinct real roots by a Sturm sequence.
fn real_root_count(g: &Poly<Rationals>) -> usize {
    let mut seq = vec![g.clone(), g.derivative()];
    while let Some(last) = seq.last().filter(|p| !p.is_zero()) {
        let r = seq[seq.len() - 2].rem(last).neg();
        seq.push(r);
    }
    seq.pop();
    let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_plus = seq.iter().map(|p| p.leading().unwrap().is_positive()).collect();
    let at_minus = seq
        .iter()
        .map(|p| p.leading().unwrap().is_positive() == (p.degree().unwrap() % 2 == 0))
        .collect();
    changes(at_minus) - changes(at_plus)
}
