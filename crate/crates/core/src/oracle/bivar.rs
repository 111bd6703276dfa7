use super::OracleStatus;
use crate::bivar::BiPoly;
use crate::error::{Error, Result};
use crate::fieldpoly::{factor_gfp, Poly, PrimeField};
use serde::{Deserialize, Serialize};

pub const DEFAULT_BIVAR_BUDGET: u64 = 5_000_000;

type P = Poly<PrimeField>;
type B = BiPoly<PrimeField>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarSearch {
    pub status: OracleStatus<B>,
    pub degx_cap: usize,
    /// Whether the cap reaches `deg_X f`, which makes `Irreducible` a proof.
    pub complete: bool,
    pub candidates_tried: u64,
}

#[derive(Serialize, Deserialize)]
struct Summary {
    status: &'static str,
    g: Option<String>,
    h: Option<String>,
    degx_cap: usize,
    complete: bool,
    candidates_tried: u64,
}

impl Serialize for BivarSearch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (status, g, h) = match &self.status {
            OracleStatus::Irreducible => ("irreducible", None, None),
            OracleStatus::Factored { g, h } => ("factored", Some(g.to_string()), Some(h.to_string())),
            OracleStatus::BudgetExceeded => ("budget_exceeded", None, None),
        };
        Summary {
            status,
            g,
            h,
            degx_cap: self.degx_cap,
            complete: self.complete,
            candidates_tried: self.candidates_tried,
        }
        .serialize(s)
    }
}

/// Monic divisors of a nonzero polynomial, in exponent-vector order.
fn monic_divisors(f: &P) -> Result<Vec<P>> {
    let fac = factor_gfp(f)?;
    let mut out = vec![Poly::one(f.field())];
    for (h, e) in &fac.factors {
        let powers: Vec<P> = (0..=*e).map(|k| h.pow(k)).collect();
        out = out.iter().flat_map(|d| powers.iter().map(move |p| d.mul(p))).collect();
    }
    Ok(out)
}

/// All polynomials of degree at most `cap`, indexed `0..p^(cap+1)`.
fn nth_poly(field: PrimeField, mut idx: u64, cap: usize) -> P {
    let p = field.p();
    let mut c = Vec::with_capacity(cap + 1);
    for _ in 0..=cap {
        c.push(idx % p);
        idx /= p;
    }
    Poly::new(field, c)
}

/// Searches for a factor `g` of `f` in `GF(p)[X][Y]` with
/// `1 <= deg_Y g <= deg_Y f / 2` whose coefficients have `X`-degree at most
/// `degx_cap` (default `deg_X f`). The leading coefficient of `g` runs over
/// monic divisors of `a_n` and the constant term over the divisors of `a_0`.
pub fn exhaustive_bivar_factor(f: &B, degx_cap: Option<usize>, budget: u64) -> Result<BivarSearch> {
    let field = f.field();
    let n = f.degree_y().filter(|&n| n >= 1).ok_or_else(|| {
        Error::PreconditionViolated(format!("{f} must have positive degree in Y"))
    })?;
    if budget == 0 {
        return Err(Error::PreconditionViolated("budget must be positive".into()));
    }
    let degx = f.degree_x().unwrap_or(0);
    let cap = degx_cap.unwrap_or(degx);
    let complete = cap >= degx;
    let p = field.p();
    let leads = monic_divisors(f.leading_y().expect("nonzero"))?;
    let a0 = &f.coeffs()[0];
    // A factor with a zero constant term is Y times something, and Y | f iff a_0 = 0.
    let tails: Vec<P> = if a0.is_zero() {
        vec![Poly::zero(field)]
    } else {
        let units: Vec<u64> = (1..p).collect();
        monic_divisors(a0)?
            .iter()
            .flat_map(|d| units.iter().map(move |u| d.scale(u)))
            .collect()
    };
    let per_slot = p.checked_pow(cap as u32 + 1).ok_or_else(|| {
        Error::BudgetExceeded(format!("{p}^{} candidate coefficients", cap + 1))
    })?;
    let mut tried = 0u64;
    let result = |status, tried| BivarSearch { status, degx_cap: cap, complete, candidates_tried: tried };
    for m in 1..=n / 2 {
        let middle = m - 1;
        let mut digits = vec![0u64; middle];
        'odometer: loop {
            for lead in &leads {
                if lead.degree().unwrap_or(0) > cap {
                    continue;
                }
                for tail in &tails {
                    if tail.degree().is_some_and(|d| d > cap) {
                        continue;
                    }
                    tried += 1;
                    if tried > budget {
                        return Ok(result(OracleStatus::BudgetExceeded, budget));
                    }
                    let mut coeffs = vec![tail.clone()];
                    coeffs.extend(digits.iter().map(|&i| nth_poly(field, i, cap)));
                    coeffs.push(lead.clone());
                    let g = BiPoly::new(field, coeffs);
                    if let Some(h) = f.div_exact(&g) {
                        return Ok(result(OracleStatus::Factored { g, h }, tried));
                    }
                }
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < per_slot {
                    continue 'odometer;
                }
                *d = 0;
            }
            break;
        }
    }
    Ok(result(OracleStatus::Irreducible, tried))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn examples() {
        let k = gf(3);
        let f = BiPoly::from_rows(k, &[&[0, 0, 2], &[], &[1]]);
        let r = exhaustive_bivar_factor(&f, None, DEFAULT_BIVAR_BUDGET).unwrap();
        let OracleStatus::Factored { g, h } = &r.status else { panic!("{r:?}") };
        assert_eq!(g.mul(h), f);
        assert_eq!(g.degree_y(), Some(1));

        let f = BiPoly::from_rows(k, &[&[0, 2], &[], &[1]]);
        let r = exhaustive_bivar_factor(&f, None, DEFAULT_BIVAR_BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::Irreducible);
        assert!(r.complete);

        let k5 = gf(5);
        let e5 = BiPoly::from_rows(k5, &[&[3], &[0, 2], &[4, 9], &[0, 3], &[0, 0, 1]]);
        let r = exhaustive_bivar_factor(&e5, None, DEFAULT_BIVAR_BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::Irreducible);
    }

    #[test]
    fn finds_planted_factors() {
        let k = gf(2);
        let g = BiPoly::from_rows(k, &[&[1, 1], &[0, 1], &[1]]);
        let h = BiPoly::from_rows(k, &[&[1], &[1, 0, 1], &[0, 1]]);
        let r = exhaustive_bivar_factor(&g.mul(&h), None, DEFAULT_BIVAR_BUDGET).unwrap();
        let OracleStatus::Factored { g: a, h: b } = &r.status else { panic!("{r:?}") };
        assert_eq!(a.mul(b), g.mul(&h));
        // content in K[X] alone is not a factor over K(X)
        let c = BiPoly::from_x(Poly::from_i64(k, &[0, 1])).mul(&BiPoly::from_rows(k, &[&[1], &[1], &[1]]));
        let r = exhaustive_bivar_factor(&c, None, DEFAULT_BIVAR_BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::Irreducible);
    }

    #[test]
    fn budget_and_caps() {
        let k = gf(3);
        let f = BiPoly::from_rows(k, &[&[0, 2], &[], &[1]]);
        let r = exhaustive_bivar_factor(&f, None, 1).unwrap();
        assert_eq!(r.status, OracleStatus::BudgetExceeded);
        let r = exhaustive_bivar_factor(&f, Some(0), 100).unwrap();
        assert!(!r.complete);
        assert!(exhaustive_bivar_factor(&BiPoly::from_rows(k, &[&[1]]), None, 10).is_err());
    }
}
