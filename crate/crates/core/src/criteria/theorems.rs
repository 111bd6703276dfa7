//! Builders for the recorded attempts. Both certification and re-verification
//! go through these, so a certificate re-verifies exactly when rebuilding each
//! attempt from its inputs reproduces it.

use super::apollonius::apollonius_margin;
use super::certificate::{Attempt, CheckRecord, CriterionId, Relation};
use crate::arith::{factorize, Int, Rat};
use crate::error::Result;
use crate::unipoly::{routh_table, RootBound, UniPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) struct Setting<'a> {
    pub f: &'a UniPoly,
    pub a: &'a Int,
    pub b: &'a Int,
    pub q: &'a Rat,
    pub bound: &'a RootBound,
    pub ga: &'a Int,
    pub gb: &'a Int,
}

fn r(x: &Int) -> Rat {
    Rat::from_integer(x.clone())
}

fn count(n: usize) -> Rat {
    Rat::from_integer(n.into())
}

pub(crate) fn rational_root_count(f: &UniPoly) -> Result<usize> {
    Ok(f.rational_roots()?.len())
}

/// Clauses tried for a quotient, in order: bound forms before geometric ones.
pub(crate) fn clause_order(unitary: bool, q_is_one: bool) -> &'static [CriterionId] {
    use CriterionId::*;
    match (unitary, q_is_one) {
        (false, true) => &[Thm1III, Thm1I, Thm0III],
        (false, false) => &[Thm1I, Thm1II, Thm0I, Thm0II],
        (true, true) => &[Thm3III, Thm3I, Thm0UnitaryIII],
        (true, false) => &[Thm3I, Thm3II, Thm0UnitaryI, Thm0UnitaryII],
    }
}

fn bound_label(bound: &RootBound) -> String {
    format!("M {} {:?} bound", if bound.strict { "<" } else { "<=" }, bound.source).to_lowercase()
}

/// `M < c` either from the stored bound or from a Rouché test at `c` itself.
fn below(f: &UniPoly, bound: &RootBound, c: &Rat) -> CheckRecord {
    if bound.proves_below(c) {
        let rel = if bound.strict { Relation::Le } else { Relation::Lt };
        return CheckRecord::new(format!("{} vs |a+b|/2", bound_label(bound)), bound.value.clone(), rel, c.clone());
    }
    if c.is_positive() {
        let (lead, rest) = f.rouche_sides(c);
        return CheckRecord::new("rouche at |a+b|/2: |a_n| R^n > sum |a_i| R^i", lead, Relation::Gt, rest);
    }
    CheckRecord::new(format!("{} vs |a+b|/2", bound_label(bound)), bound.value.clone(), Relation::Lt, c.clone())
}

pub(crate) fn attempt(
    criterion: CriterionId,
    s: &Setting<'_>,
    rational_roots: &mut dyn FnMut() -> Result<usize>,
) -> Result<Attempt> {
    use CriterionId::*;
    let (a, b, q) = (r(s.a), r(s.b), s.q.clone());
    let big_b = s.bound.value.clone();
    let mut checks = Vec::new();
    let mut detail = None;
    if criterion.quotient_kind() == Some(super::QuotientKind::Unitary) {
        checks.push(CheckRecord::ints("gcd(f(a), f'(a))", s.ga, Relation::Eq, &Int::one()));
        checks.push(CheckRecord::ints("gcd(f(b), f'(b))", s.gb, Relation::Eq, &Int::one()));
    }
    match criterion {
        Thm1III | Thm3III => {
            checks.push(CheckRecord::new("q", q, Relation::Eq, Rat::one()));
            checks.push(CheckRecord::new("a^2 < b^2", &a * &a, Relation::Lt, &b * &b));
            let half = (&a + &b).abs() / Rat::from_integer(2.into());
            checks.push(below(s.f, s.bound, &half));
        }
        Thm1I | Thm3I => {
            let rhs = &q * a.abs() + (Rat::one() + &q) * &big_b;
            checks.push(CheckRecord::new("|b| > q|a| + (1+q)B", b.abs(), Relation::Gt, rhs));
        }
        Thm1II | Thm3II => {
            checks.push(CheckRecord::new("rational roots", count(rational_roots()?), Relation::Eq, Rat::zero()));
            checks.push(CheckRecord::new("|b| > B", b.abs(), Relation::Gt, big_b.clone()));
            let lhs = (b.abs() - &big_b) * (b.abs() - &big_b);
            let rhs = &q * (a.abs() + &big_b) * (a.abs() + &big_b);
            checks.push(CheckRecord::new("(|b|-B)^2 > q(|a|+B)^2", lhs, Relation::Gt, rhs));
        }
        Thm0I | Thm0UnitaryI => {
            checks.push(CheckRecord::new("q", q.clone(), Relation::Gt, Rat::one()));
            if q > Rat::one() {
                let t = &q * &q;
                let margin = apollonius_margin(s.a, s.b, &t, &big_b);
                checks.push(CheckRecord::new("disk |z| <= B inside Ap(a,b,q): margin", margin, Relation::Gt, Rat::zero()));
            }
        }
        Thm0II | Thm0UnitaryII => {
            checks.push(CheckRecord::new("q", q.clone(), Relation::Gt, Rat::one()));
            checks.push(CheckRecord::new("rational roots", count(rational_roots()?), Relation::Eq, Rat::zero()));
            if q > Rat::one() {
                let margin = apollonius_margin(s.a, s.b, &q, &big_b);
                checks.push(CheckRecord::new("disk |z| <= B inside Ap(a,b,sqrt q): margin", margin, Relation::Gt, Rat::zero()));
            }
        }
        Thm0III | Thm0UnitaryIII => {
            checks.push(CheckRecord::new("q", q, Relation::Eq, Rat::one()));
            let mid = (&a + &b) / Rat::from_integer(2.into());
            let shifted = s.f.shift(&mid);
            let g = if s.b > s.a { shifted } else { shifted.reflect() };
            let table = routh_table(&g);
            checks.push(CheckRecord::new(
                "routh zero pivots",
                count(usize::from(table.degenerate)),
                Relation::Eq,
                Rat::zero(),
            ));
            checks.push(CheckRecord::new("routh sign changes", count(table.sign_changes), Relation::Eq, Rat::zero()));
            let column: Vec<String> = table.first_column.iter().map(ToString::to_string).collect();
            let side = if s.b > s.a { "x < (a+b)/2" } else { "x > (a+b)/2" };
            detail = Some(format!("half-plane {side}; first column [{}]", column.join(", ")));
        }
        other => unreachable!("{other} is not a univariate theorem clause"),
    }
    Ok(Attempt::new(criterion, Some(s.q.clone()), checks, detail))
}

pub(crate) fn degree_one_attempt(f: &UniPoly) -> Attempt {
    let deg = count(f.degree().unwrap_or(0));
    Attempt::new(CriterionId::DegreeOne, None, vec![CheckRecord::new("deg f", deg, Relation::Eq, Rat::one())], None)
}

/// Side conditions of the prime-value corollaries evaluated at `b`.
pub(crate) fn corollary_attempt(criterion: CriterionId, f: &UniPoly, b: &Int, effort: u64) -> Result<Attempt> {
    let fb = f.eval(b);
    let a0 = f.coeff(0);
    let n = f.degree().unwrap_or(0);
    let an = f.coeff(n);
    let mut checks = Vec::new();
    let coro2 = |checks: &mut Vec<CheckRecord>| {
        let (lead, rest) = f.coro2_sides();
        checks.push(CheckRecord::ints("|a_n| > 2|a_(n-1)| + ... + 2^n |a_0|", &lead, Relation::Gt, &rest));
    };
    let omega = |fb: &Int| -> Result<(usize, usize)> {
        if fb.is_zero() {
            return Ok((0, 0));
        }
        let fact = factorize(fb, effort)?;
        Ok((fact.factors.iter().map(|pp| pp.exponent as usize).sum(), fact.num_primes()))
    };
    match criterion {
        CriterionId::CorCoro2 => {
            coro2(&mut checks);
            checks.push(CheckRecord::ints("a_0", &a0, Relation::Ne, &Int::zero()));
            checks.push(CheckRecord::ints("|b|", &b.abs(), Relation::Ge, &Int::one()));
            checks.push(CheckRecord::new("prime factors of |f(b)| with multiplicity", count(omega(&fb)?.0), Relation::Eq, Rat::one()));
            checks.push(CheckRecord::ints("|f(b)| > |a_0|", &fb.abs(), Relation::Gt, &a0.abs()));
        }
        CriterionId::CorEk2 => {
            let ek = f.is_enestrom_kakeya() || (-f).is_enestrom_kakeya();
            checks.push(CheckRecord::new("f or -f is Enestrom-Kakeya", count(usize::from(ek)), Relation::Eq, Rat::one()));
            checks.push(CheckRecord::ints("a_0", &a0, Relation::Ne, &Int::zero()));
            checks.push(CheckRecord::ints("f(-1)", &f.eval(&-Int::one()), Relation::Ne, &Int::zero()));
            checks.push(CheckRecord::ints("|b|", &b.abs(), Relation::Ge, &Int::from(2)));
            checks.push(CheckRecord::new("prime factors of |f(b)| with multiplicity", count(omega(&fb)?.0), Relation::Eq, Rat::one()));
        }
        CriterionId::CorCorovechi => {
            coro2(&mut checks);
            checks.push(CheckRecord::ints("a_0 a_n", &(&a0 * &an), Relation::Ne, &Int::zero()));
            checks.push(CheckRecord::ints("|b|", &b.abs(), Relation::Ge, &Int::one()));
            let (big_omega, small_omega) = omega(&fb)?;
            checks.push(CheckRecord::new("distinct primes of |f(b)|", count(small_omega), Relation::Eq, Rat::one()));
            checks.push(CheckRecord::new("exponent k of |f(b)| = p^k", count(big_omega), Relation::Ge, count(2)));
            if small_omega == 1 {
                let p = factorize(&fb, effort)?.factors[0].prime.clone();
                let residue = f.derivative().eval(b).mod_floor(&p);
                checks.push(CheckRecord::ints("f'(b) mod p", &residue, Relation::Ne, &Int::zero()));
            }
        }
        other => unreachable!("{other} is not a prime-value corollary"),
    }
    Ok(Attempt::new(criterion, None, checks, None))
}
