use super::{FieldFactorization, Poly, Rationals};
use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::oracle::factor_integer_poly;
use crate::unipoly::UniPoly;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `f = scale * g` with `g` primitive in `Z[X]` and positive leading coefficient.
pub fn to_integer_poly(f: &Poly<Rationals>) -> (Rat, UniPoly) {
    if f.is_zero() {
        return (Rat::zero(), UniPoly::zero());
    }
    let l = f.coeffs().iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    let lr = Rat::from_integer(l.clone());
    let g = UniPoly::new(f.coeffs().iter().map(|c| (c * &lr).to_integer()).collect());
    let (content, g) = g.primitive_part();
    (Rat::new(content, l), g)
}

pub fn from_integer_poly(g: &UniPoly) -> Poly<Rationals> {
    Poly::from_ints(Rationals, g.coeffs())
}

/// Factorization over Q: denominators cleared, content split off, and the
/// primitive part factored by the Kronecker oracle within `budget` tuples.
pub fn factor_q(f: &Poly<Rationals>, budget: u64) -> Result<FieldFactorization<Rationals>> {
    if f.is_zero() {
        return Err(Error::PreconditionViolated("cannot factor the zero polynomial".into()));
    }
    let (mut unit, g) = to_integer_poly(f);
    let fac = factor_integer_poly(&g, budget)?;
    unit *= Rat::from_integer(fac.content);
    let mut factors = Vec::new();
    for (h, e) in fac.factors {
        let lc = Rat::from_integer(h.leading().expect("nonzero").clone());
        unit *= num_traits::pow(lc, e as usize);
        factors.push((from_integer_poly(&h).monic(), e));
    }
    Ok(FieldFactorization { unit, factors }.normalize())
}

/// Eisenstein's criterion at `p` for a primitive integer polynomial:
/// `p | a_i` for `i < n`, `p` does not divide `a_n`, `p^2` does not divide `a_0`.
pub fn eisenstein_check(f: &UniPoly, p: &Int) -> bool {
    let Some(n) = f.degree().filter(|&n| n >= 1) else { return false };
    if !p.is_positive() || p.is_one() {
        return false;
    }
    let c = f.coeffs();
    c[..n].iter().all(|a| a.is_multiple_of(p)) && !c[n].is_multiple_of(p) && !c[0].is_multiple_of(&(p * p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn factor_over_q() {
        let f = Poly::from_i64(Rationals, &[1, 5, 6]);
        let fac = factor_q(&f, DEFAULT_BUDGET).unwrap();
        assert_eq!(fac.unit, rat(6, 1));
        let shown: Vec<_> = fac.factors.iter().map(|(g, e)| (g.to_string(), *e)).collect();
        assert_eq!(shown, vec![("x+(1/3)".into(), 1), ("x+(1/2)".into(), 1)]);
        assert_eq!(fac.expand(Rationals), f);

        let e6 = Poly::from_i64(Rationals, &[3, 9, 0, 1]);
        assert!(factor_q(&e6, DEFAULT_BUDGET).unwrap().is_irreducible());

        let sq = Poly::from_i64(Rationals, &[0, 0, 1]);
        let fac = factor_q(&sq, DEFAULT_BUDGET).unwrap();
        assert_eq!(fac.factors, vec![(Poly::x(Rationals), 2)]);

        let half = Poly::new(Rationals, vec![rat(-1, 2), rat(0, 1), rat(-3, 4)]);
        let fac = factor_q(&half, DEFAULT_BUDGET).unwrap();
        assert_eq!(fac.unit, rat(-3, 4));
        assert_eq!(fac.expand(Rationals), half);
        assert!(factor_q(&Poly::zero(Rationals), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn integer_scaling() {
        let f = Poly::new(Rationals, vec![rat(1, 2), rat(-3, 4)]);
        let (s, g) = to_integer_poly(&f);
        assert_eq!(s, rat(-1, 4));
        assert_eq!(g, UniPoly::from_i64(&[-2, 3]));
    }

    #[test]
    fn eisenstein() {
        let three = Int::from(3);
        let two = Int::from(2);
        assert!(eisenstein_check(&UniPoly::from_i64(&[3, 0, 6, 9, 3, 0, 1]), &three));
        assert!(!eisenstein_check(&UniPoly::from_i64(&[1, 0, 1]), &two));
        assert!(eisenstein_check(&UniPoly::from_i64(&[2, 2, 1]), &two));
        assert!(!eisenstein_check(&UniPoly::from_i64(&[4, 2, 1]), &two));
        assert!(!eisenstein_check(&UniPoly::from_i64(&[2]), &two));
    }
}
