use super::{FieldFactorization, Poly, PrimeField};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

type P = Poly<PrimeField>;

/// Seed of the equal-degree splitting generator; reset on every call.
pub const FACTOR_SEED: u64 = 0x5eed_f00d;

/// Complete factorization over `GF(p)` into monic irreducibles: squarefree
/// decomposition, distinct-degree splitting, then Cantor–Zassenhaus.
pub fn factor_gfp(f: &P) -> Result<FieldFactorization<PrimeField>> {
    let field = f.field();
    let Some(lc) = f.leading().copied() else {
        return Err(Error::PreconditionViolated("cannot factor the zero polynomial".into()));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut merged: BTreeMap<Vec<u64>, u32> = BTreeMap::new();
    for (part, e) in squarefree(&f.monic()) {
        for (g, d) in distinct_degree(&part) {
            for h in equal_degree(&g, d, &mut rng) {
                *merged.entry(h.coeffs().to_vec()).or_default() += e;
            }
        }
    }
    let factors = merged.into_iter().map(|(c, e)| (Poly::new(field, c), e)).collect();
    Ok(FieldFactorization { unit: lc, factors }.normalize())
}

/// Pairs `(s_i, i)` with `f = prod s_i^i`, each `s_i` squarefree and monic.
fn squarefree(f: &P) -> Vec<(P, u32)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // What is left is a p-th power; Frobenius is the identity on GF(p).
        let p = field.p() as usize;
        let root = Poly::new(field, c.coeffs().iter().step_by(p).copied().collect());
        let p = field.p() as u32;
        out.extend(squarefree(&root).into_iter().map(|(g, e)| (g, e * p)));
    }
    out
}

fn pow_mod(base: &P, exp: &BigUint, modulus: &P) -> P {
    let mut acc = Poly::one(base.field());
    let base = base.rem(modulus);
    for i in (0..exp.bits()).rev() {
        acc = acc.mul(&acc).rem(modulus);
        if exp.bit(i) {
            acc = acc.mul(&base).rem(modulus);
        }
    }
    acc
}

/// Splits a squarefree monic `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &P) -> Vec<(P, usize)> {
    let field = f.field();
    let x = Poly::x(field);
    let p = BigUint::from(field.p());
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = pow_mod(&h, &p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

fn equal_degree(f: &P, d: usize, rng: &mut ChaCha8Rng) -> Vec<P> {
    let n = f.degree().expect("nonzero");
    if n <= d {
        return vec![f.clone()];
    }
    let field = f.field();
    let p = field.p();
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace map to GF(2).
            let mut term = a.rem(f);
            let mut sum = term.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                sum = sum.add(&term);
            }
            sum
        } else {
            pow_mod(&a, &exponent, f).sub(&Poly::one(field))
        };
        let g = b.gcd(f);
        if let Some(k) = g.degree() {
            if k > 0 && k < n {
                let h = f.div_exact(&g).expect("gcd divides");
                let mut out = equal_degree(&g, d, rng);
                out.extend(equal_degree(&h, d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn render(fac: &FieldFactorization<PrimeField>) -> Vec<(String, u32)> {
        fac.factors.iter().map(|(g, e)| (g.to_string(), *e)).collect()
    }

    #[test]
    fn small_examples() {
        let f3 = gf(3);
        let fac = factor_gfp(&Poly::from_i64(f3, &[-1, 0, 1])).unwrap();
        assert_eq!(render(&fac), vec![("x+1".into(), 1), ("x+2".into(), 1)]);
        assert!(factor_gfp(&Poly::from_i64(f3, &[1, 0, 1])).unwrap().is_irreducible());
        assert!(factor_gfp(&Poly::zero(f3)).is_err());
    }

    #[test]
    fn fermat_polynomial_splits_into_all_linears() {
        for p in [2u64, 3, 5, 7, 13] {
            let field = gf(p);
            let f = Poly::x(field).pow(p as u32).sub(&Poly::x(field));
            let fac = factor_gfp(&f).unwrap();
            assert_eq!(fac.factors.len(), p as usize);
            assert!(fac.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
            assert_eq!(fac.expand(field), f);
        }
    }

    #[test]
    fn inseparable_parts() {
        let f3 = gf(3);
        // (x^3 + 2)^2 (x^2+1) = (x+2)^6 (x^2+1) over GF(3)
        let f = Poly::from_i64(f3, &[2, 0, 0, 1]).pow(2).mul(&Poly::from_i64(f3, &[1, 0, 1]));
        let fac = factor_gfp(&f).unwrap();
        assert_eq!(render(&fac), vec![("x+2".into(), 6), ("x^2+1".into(), 1)]);
        let f2 = gf(2);
        let g = Poly::from_i64(f2, &[1, 1, 0, 0, 1]).pow(4);
        assert_eq!(factor_gfp(&g).unwrap().factors.len(), 1);
    }

    #[test]
    fn deterministic() {
        let f = Poly::from_i64(gf(7), &[3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 1]);
        assert_eq!(factor_gfp(&f).unwrap(), factor_gfp(&f).unwrap());
    }

    /// Rabin's test, independent of the splitting code.
    fn rabin_irreducible(g: &P) -> bool {
        let field = g.field();
        let n = g.degree().unwrap();
        let x = Poly::x(field);
        let frob = |k: usize| pow_mod(&x, &BigUint::from(field.p()).pow(k as u32), g);
        if !frob(n).sub(&x).rem(g).is_zero() {
            return false;
        }
        (2..=n).filter(|r| n % r == 0 && (2..*r).all(|s| r % s != 0)).all(|r| frob(n / r).sub(&x).gcd(g).is_one())
    }

    #[test]
    fn rabin_agrees_on_known_cases() {
        assert!(rabin_irreducible(&Poly::from_i64(gf(3), &[1, 0, 1])));
        assert!(!rabin_irreducible(&Poly::from_i64(gf(5), &[1, 0, 1])));
        assert!(!rabin_irreducible(&Poly::from_i64(gf(2), &[1, 0, 1, 0, 1])));
    }

    proptest! {
        #[test]
        fn product_reproduces_input(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
                                    c in prop::collection::vec(0i64..11, 1..12)) {
            let field = gf(p);
            let f = Poly::from_i64(field, &c);
            prop_assume!(!f.is_zero());
            let fac = factor_gfp(&f).unwrap();
            prop_assert_eq!(fac.expand(field), f);
            for (i, (g, _)) in fac.factors.iter().enumerate() {
                prop_assert!(g.leading() == Some(&1));
                prop_assert!(rabin_irreducible(g));
                for (h, _) in &fac.factors[i + 1..] {
                    prop_assert!(g.canonical_cmp(h).is_lt());
                }
            }
        }
    }
}
