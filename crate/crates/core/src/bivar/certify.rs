use super::BiPoly;
use crate::arith::{Int, Rat};
use crate::criteria::{Attempt, CheckRecord, CriterionId, DivisorMode, QuotientKind, Relation, Verdict};
use crate::error::{Error, Result};
use crate::fieldpoly::{divisor_degrees, DegreeSet, DivisorKind, FactorField, FieldFactorization, Poly};
use crate::oracle::DEFAULT_BUDGET;
use crate::serde_num;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivarOptions {
    pub divisors: DivisorMode,
    /// Kronecker budget for factoring over Q.
    pub budget: u64,
}

impl Default for BivarOptions {
    fn default() -> Self {
        BivarOptions { divisors: DivisorMode::Auto, budget: DEFAULT_BUDGET }
    }
}

/// `q = max (deg d2 - deg d1) <= Delta` with the degree pair realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeQuotient {
    pub kind: QuotientKind,
    pub value: i64,
    pub d1_degree: usize,
    pub d2_degree: usize,
    /// Number of distinct divisor degrees on each side; zero when `q` was
    /// obtained from the shape argument without enumerating.
    pub search_space_sizes: (usize, usize),
}

impl DegreeQuotient {
    fn shape(kind: QuotientKind) -> Self {
        DegreeQuotient { kind, value: 0, d1_degree: 0, d2_degree: 0, search_space_sizes: (0, 0) }
    }
}

/// Record of a bivariate irreducibility argument over `K(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivarCertificate {
    pub verdict: Verdict,
    pub criterion: Option<CriterionId>,
    pub field: String,
    pub poly: String,
    /// The pair actually used, after orientation (`deg f(X,a) <= deg f(X,b)`).
    pub a: String,
    pub b: String,
    pub swapped: bool,
    pub deg_y: usize,
    pub deg_a: i64,
    pub deg_b: i64,
    pub fa: String,
    pub fb: String,
    pub deg_fa: usize,
    pub deg_fb: usize,
    #[serde(with = "serde_num::rat")]
    pub delta: Rat,
    /// `None` is minus infinity.
    #[serde(with = "serde_num::opt_rat")]
    pub lambda: Option<Rat>,
    /// Degrees of `gcd(f(X,a), f_Y(X,a))` and of the `b` analogue.
    pub gcd_degrees: (usize, usize),
    pub factorization_a: Option<String>,
    pub factorization_b: Option<String>,
    pub quotient: Option<DegreeQuotient>,
    pub quotient_unitary: Option<DegreeQuotient>,
    pub attempts: Vec<Attempt>,
}

impl BivarCertificate {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }
}

fn int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Degree of a polynomial, with the zero polynomial counted as degree 0.
fn deg0<F: FactorField>(p: &Poly<F>) -> i64 {
    p.degree_i64().max(0)
}

/// `max {s2 - s1 <= Delta}` over the two degree sets; `(0, 0)` is always feasible.
fn degree_quotient(da: &DegreeSet, db: &DegreeSet, two_delta: i64, kind: QuotientKind) -> DegreeQuotient {
    let mut best = (0i64, 0usize, 0usize);
    for s1 in da.degrees() {
        for s2 in db.degrees() {
            let v = s2 as i64 - s1 as i64;
            if 2 * v <= two_delta && (v > best.0 || (v == best.0 && s1 < best.1)) {
                best = (v, s1, s2);
            }
        }
    }
    DegreeQuotient {
        kind,
        value: best.0,
        d1_degree: best.1,
        d2_degree: best.2,
        search_space_sizes: (da.witnesses.len(), db.witnesses.len()),
    }
}

fn main_check(deg_a: i64, lambda: &Option<Rat>, deg_b: i64, q: i64) -> CheckRecord {
    let floor = lambda.clone().map_or(int(deg_a), |l| l.max(int(deg_a)));
    CheckRecord::new("deg b > max(deg a, lambda) + q", int(deg_b), Relation::Gt, floor + int(q))
}

struct Context<F: FactorField> {
    a: Poly<F>,
    b: Poly<F>,
    swapped: bool,
    fa: Poly<F>,
    fb: Poly<F>,
    ga: Poly<F>,
    gb: Poly<F>,
}

impl<F: FactorField> Context<F> {
    fn new(f: &BiPoly<F>, a: &Poly<F>, b: &Poly<F>) -> Result<Self> {
        let (mut a, mut b) = (a.clone(), b.clone());
        let (mut fa, mut fb) = (f.substitute(&a), f.substitute(&b));
        if fa.is_zero() || fb.is_zero() {
            return Err(Error::PreconditionViolated("f(X,a(X)) f(X,b(X)) must be nonzero".into()));
        }
        let swapped = fa.degree() > fb.degree();
        if swapped {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
        let fy = f.partial_y();
        let ga = fa.gcd(&fy.substitute(&a));
        let gb = fb.gcd(&fy.substitute(&b));
        Ok(Context { a, b, swapped, fa, fb, ga, gb })
    }

    fn two_delta(&self) -> i64 {
        self.fb.degree_i64() - self.fa.degree_i64()
    }
}

fn shape_text<F: FactorField>(fac: &FieldFactorization<F>) -> String {
    fac.to_string()
}

/// Irreducibility of `f` over `K(X)` from the values `f(X,a(X))`, `f(X,b(X))`.
///
/// The shape corollaries are tried first with `a = 0` and `g` each of the
/// given nonconstant polynomials; then the general degree inequality with
/// admissible and, when both derivative gcds are one, unitary divisors.
pub fn certify_bivar<F: FactorField>(
    f: &BiPoly<F>,
    a: &Poly<F>,
    b: &Poly<F>,
    options: BivarOptions,
) -> Result<BivarCertificate> {
    let field = f.field();
    let n = f.degree_y().filter(|&n| n >= 1).ok_or_else(|| {
        Error::PreconditionViolated(format!("{f} must have positive degree in Y"))
    })?;
    if f.coeffs()[0].is_zero() {
        return Err(Error::PreconditionViolated("a_0(X) must be nonzero".into()));
    }
    let lambda = f.lambda_bound();
    let ctx = Context::new(f, a, b)?;
    let mut attempts = Vec::new();

    let top = f.coeffs()[n].degree_i64();
    let max_lower = f.coeffs()[..n].iter().map(Poly::degree_i64).max().unwrap_or(-1);
    let zero = Poly::zero(field);
    let mut shapes_tried = Vec::new();
    for g in [&ctx.b, &ctx.a] {
        if g.degree().unwrap_or(0) == 0 || shapes_tried.contains(&g) {
            continue;
        }
        shapes_tried.push(g);
        let fg = f.substitute(g);
        let fac = F::factor(&fg, options.budget)?;
        let multiplicity: u32 = fac.factors.iter().map(|(_, e)| e).sum();
        let g_deg = g.degree_i64();
        let common = vec![
            CheckRecord::new("deg a_0", int(f.coeffs()[0].degree_i64()), Relation::Ge, int(0)),
            CheckRecord::new("deg a_n >= max deg a_i", int(top), Relation::Ge, int(max_lower)),
            CheckRecord::new("deg g", int(g_deg), Relation::Ge, int(1)),
            CheckRecord::new("deg f(X,g) > deg a_0", int(fg.degree_i64()), Relation::Gt, int(f.coeffs()[0].degree_i64())),
        ];
        let mut checks = common.clone();
        checks.push(CheckRecord::new("irreducible factors of f(X,g) with multiplicity", int(multiplicity.into()), Relation::Eq, int(1)));
        checks.push(main_check(0, &lambda, g_deg, 0));
        let coro6 = Attempt::new(CriterionId::CorCoro6, Some(int(0)), checks, Some(format!("g = {g}")));

        let mut checks = common;
        checks.push(CheckRecord::new("distinct irreducible factors of f(X,g)", int(fac.factors.len() as i64), Relation::Eq, int(1)));
        let gg = fg.gcd(&f.partial_y().substitute(g));
        checks.push(CheckRecord::new("deg gcd(f(X,g), f_Y(X,g))", int(gg.degree_i64()), Relation::Eq, int(0)));
        checks.push(main_check(0, &lambda, g_deg, 0));
        let coro8 = Attempt::new(CriterionId::CorCoro8, Some(int(0)), checks, Some(format!("g = {g}")));

        for (attempt, kind) in [(coro6, QuotientKind::Admissible), (coro8, QuotientKind::Unitary)] {
            let ok = attempt.succeeded;
            let criterion = attempt.criterion;
            attempts.push(attempt);
            if ok {
                let fa = f.coeffs()[0].clone();
                let fy0 = f.coeffs().get(1).cloned().unwrap_or_else(|| zero.clone());
                return Ok(BivarCertificate {
                    verdict: Verdict::Irreducible,
                    criterion: Some(criterion),
                    field: field.name(),
                    poly: f.to_string(),
                    a: zero.to_string(),
                    b: g.to_string(),
                    swapped: false,
                    deg_y: n,
                    deg_a: 0,
                    deg_b: g_deg,
                    fa: fa.to_string(),
                    fb: fg.to_string(),
                    deg_fa: fa.degree().unwrap_or(0),
                    deg_fb: fg.degree().unwrap_or(0),
                    delta: Rat::new(Int::from(fg.degree_i64() - fa.degree_i64()), Int::from(2)),
                    lambda,
                    gcd_degrees: (fa.gcd(&fy0).degree().unwrap_or(0), gg.degree().unwrap_or(0)),
                    factorization_a: None,
                    factorization_b: Some(shape_text(&fac)),
                    quotient: (kind == QuotientKind::Admissible).then(|| DegreeQuotient::shape(kind)),
                    quotient_unitary: (kind == QuotientKind::Unitary).then(|| DegreeQuotient::shape(kind)),
                    attempts,
                });
            }
        }
    }

    let two_delta = ctx.two_delta();
    let fac_a = F::factor(&ctx.fa, options.budget)?;
    let fac_b = F::factor(&ctx.fb, options.budget)?;
    let coprime = ctx.ga.is_one() && ctx.gb.is_one();
    let deg_a = deg0(&ctx.a);
    let deg_b = deg0(&ctx.b);
    let mut quotient = None;
    let mut quotient_unitary = None;
    if options.divisors != DivisorMode::Unitary {
        let da = divisor_degrees(&fac_a, &DivisorKind::Admissible(ctx.ga.clone()))?;
        let db = divisor_degrees(&fac_b, &DivisorKind::Admissible(ctx.gb.clone()))?;
        let q = degree_quotient(&da, &db, two_delta, QuotientKind::Admissible);
        attempts.push(Attempt::new(CriterionId::Thm5, Some(int(q.value)), vec![main_check(deg_a, &lambda, deg_b, q.value)], None));
        quotient = Some(q);
    }
    if options.divisors == DivisorMode::Unitary || coprime {
        let da = divisor_degrees(&fac_a, &DivisorKind::Unitary)?;
        let db = divisor_degrees(&fac_b, &DivisorKind::Unitary)?;
        let q = degree_quotient(&da, &db, two_delta, QuotientKind::Unitary);
        let checks = vec![
            CheckRecord::new("deg gcd(f(X,a), f_Y(X,a))", int(ctx.ga.degree_i64()), Relation::Eq, int(0)),
            CheckRecord::new("deg gcd(f(X,b), f_Y(X,b))", int(ctx.gb.degree_i64()), Relation::Eq, int(0)),
            main_check(deg_a, &lambda, deg_b, q.value),
        ];
        attempts.push(Attempt::new(CriterionId::Thm7, Some(int(q.value)), checks, None));
        quotient_unitary = Some(q);
    }
    let criterion = attempts.iter().find(|t| t.succeeded).map(|t| t.criterion);
    Ok(BivarCertificate {
        verdict: if criterion.is_some() { Verdict::Irreducible } else { Verdict::Inconclusive },
        criterion,
        field: field.name(),
        poly: f.to_string(),
        a: ctx.a.to_string(),
        b: ctx.b.to_string(),
        swapped: ctx.swapped,
        deg_y: n,
        deg_a,
        deg_b,
        fa: ctx.fa.to_string(),
        fb: ctx.fb.to_string(),
        deg_fa: ctx.fa.degree().unwrap_or(0),
        deg_fb: ctx.fb.degree().unwrap_or(0),
        delta: Rat::new(Int::from(two_delta), Int::from(2)),
        lambda,
        gcd_degrees: (ctx.ga.degree().unwrap_or(0), ctx.gb.degree().unwrap_or(0)),
        factorization_a: Some(shape_text(&fac_a)),
        factorization_b: Some(shape_text(&fac_b)),
        quotient,
        quotient_unitary,
        attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldpoly::{PrimeField, Rationals};

    fn ex5() -> BiPoly<Rationals> {
        BiPoly::from_rows(Rationals, &[&[3], &[0, 2], &[4, 9], &[0, 3], &[0, 0, 1]])
    }

    fn ex6() -> BiPoly<Rationals> {
        BiPoly::from_rows(Rationals, &[&[9], &[54, 81], &[0, 6, 18], &[], &[0, 0, 1]])
    }

    #[test]
    fn worked_examples() {
        let (zero, x) = (Poly::zero(Rationals), Poly::x(Rationals));
        let c = certify_bivar(&ex5(), &zero, &x, BivarOptions::default()).unwrap();
        assert!(c.is_irreducible());
        assert_eq!(c.criterion, Some(CriterionId::CorCoro6));
        assert_eq!(c.fb, "x^6+3x^4+9x^3+6x^2+3");

        let c = certify_bivar(&ex6(), &zero, &x, BivarOptions::default()).unwrap();
        assert!(c.is_irreducible());
        assert_eq!(c.criterion, Some(CriterionId::CorCoro8));
        assert_eq!(c.attempts[0].criterion, CriterionId::CorCoro6);
        assert!(!c.attempts[0].succeeded);
        assert_eq!(c.gcd_degrees.1, 0);
        assert_eq!(c.factorization_b.as_deref(), Some("1 * (x^3+9x+3)^2"));
    }

    #[test]
    fn reducible_abstains() {
        for p in [3u64, 5, 7] {
            let k = PrimeField::new(p).unwrap();
            let f = BiPoly::from_rows(k, &[&[0, 0, p as i64 - 1], &[], &[1]]);
            for (a, b) in [(vec![0], vec![0, 1]), (vec![1], vec![0, 0, 1]), (vec![0, 2], vec![1, 1, 1])] {
                let c = certify_bivar(&f, &Poly::from_i64(k, &a), &Poly::from_i64(k, &b), BivarOptions::default());
                if let Ok(c) = c {
                    assert!(!c.is_irreducible(), "{c:?}");
                }
            }
        }
        let q = BiPoly::from_rows(Rationals, &[&[0, 0, -1], &[], &[1]]);
        let c = certify_bivar(&q, &Poly::zero(Rationals), &Poly::x(Rationals).pow(2), BivarOptions::default());
        assert!(c.map_or(true, |c| !c.is_irreducible()));
    }

    #[test]
    fn general_inequality() {
        // f = Y^2 + X over GF(5): fa = X at a = 0, fb = X^4 + X at b = X^2.
        let k = PrimeField::new(5).unwrap();
        let f = BiPoly::from_rows(k, &[&[0, 1], &[], &[1]]);
        let opts = BivarOptions { divisors: DivisorMode::Auto, budget: 1 };
        let c = certify_bivar(&f, &Poly::from_i64(k, &[0, 0, 1]), &Poly::zero(k), opts).unwrap();
        assert!(c.swapped);
        assert_eq!(c.delta, Rat::new(3.into(), 2.into()));
        assert!(c.attempts.iter().any(|t| t.criterion == CriterionId::Thm5));
        assert!(c.is_irreducible());
    }

    #[test]
    fn preconditions() {
        let k = PrimeField::new(3).unwrap();
        let f = BiPoly::from_rows(k, &[&[], &[1], &[1]]);
        assert!(certify_bivar(&f, &Poly::zero(k), &Poly::x(k), BivarOptions::default()).is_err());
        let g = BiPoly::from_rows(k, &[&[1, 1]]);
        assert!(certify_bivar(&g, &Poly::zero(k), &Poly::x(k), BivarOptions::default()).is_err());
        let h = BiPoly::from_rows(k, &[&[0, 2], &[1]]);
        assert!(certify_bivar(&h, &Poly::x(k), &Poly::zero(k), BivarOptions::default()).is_err());
    }
}
