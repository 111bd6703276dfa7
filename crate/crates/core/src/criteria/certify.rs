use super::certificate::{Certificate, CheckRecord, CriterionId, MethodNotes, Relation, Values, Verdict};
use super::pattern::match_pattern;
use super::quotient::{quotient_from_factorizations, QuotientBound, QuotientKind};
use super::theorems::{self, clause_order, Setting};
use crate::arith::{factorize, Int, DEFAULT_EFFORT};
use crate::error::{Error, Result};
use crate::unipoly::{best_root_bound, RootBound, UniPoly};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;

/// Which divisor sets the quotient is taken over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisorMode {
    Admissible,
    Unitary,
    /// Admissible divisors, plus the unitary clauses when both derivative gcds are one.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub divisors: DivisorMode,
    /// Step budget for each integer factorization.
    pub effort: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { divisors: DivisorMode::Auto, effort: DEFAULT_EFFORT }
    }
}

/// Per-polynomial state shared by every `(a, b)` tried: the root bound and,
/// once needed, the number of rational roots.
pub struct Certifier {
    f: UniPoly,
    bound: RootBound,
    rational_roots: OnceCell<usize>,
    options: CertifyOptions,
}

impl Certifier {
    pub fn new(f: &UniPoly, options: CertifyOptions) -> Result<Self> {
        match f.degree() {
            None | Some(0) => Err(Error::PreconditionViolated(format!(
                "irreducibility needs a polynomial of degree at least one, got {f}"
            ))),
            Some(_) => Ok(Certifier {
                f: f.clone(),
                bound: best_root_bound(f),
                rational_roots: OnceCell::new(),
                options,
            }),
        }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.f
    }

    pub fn bound(&self) -> &RootBound {
        &self.bound
    }

    fn notes(&self) -> MethodNotes {
        MethodNotes::new(self.options.effort, self.options.divisors)
    }

    fn rational_root_count(&self) -> Result<usize> {
        if let Some(&n) = self.rational_roots.get() {
            return Ok(n);
        }
        let n = theorems::rational_root_count(&self.f)?;
        Ok(*self.rational_roots.get_or_init(|| n))
    }

    fn degree_one(&self) -> Certificate {
        let mut cert = Certificate::empty(&self.f, self.notes());
        cert.attempts.push(theorems::degree_one_attempt(&self.f));
        cert.criterion = Some(CriterionId::DegreeOne);
        cert.verdict = Verdict::Irreducible;
        cert
    }

    /// Try every applicable clause for the pair `(a, b)`; the pair is reordered
    /// so that `|f(a)| < |f(b)|`.
    pub fn certify(&self, a: &Int, b: &Int) -> Result<Certificate> {
        if self.f.degree() == Some(1) {
            return Ok(self.degree_one());
        }
        if a == b {
            return Err(Error::PreconditionViolated(format!("a and b must differ, both are {a}")));
        }
        let (fa, fb) = (self.f.eval(a), self.f.eval(b));
        if fa.is_zero() || fb.is_zero() {
            return Err(Error::PreconditionViolated(format!(
                "f({a}) = {fa} and f({b}) = {fb}; both values must be nonzero"
            )));
        }
        if fa.abs() == fb.abs() {
            return Err(Error::PreconditionViolated(format!(
                "|f({a})| = |f({b})| = {}; the values must differ in absolute value",
                fa.abs()
            )));
        }
        let (a, b) = if fa.abs() < fb.abs() { (a, b) } else { (b, a) };
        let values = Values::compute(&self.f, a, b, self.options.effort)?;

        let mut cert = Certificate::empty(&self.f, self.notes());
        cert.a = Some(a.clone());
        cert.b = Some(b.clone());
        cert.bound = Some(self.bound.clone());
        cert.preconditions = vec![
            CheckRecord::ints("|f(a)|", &values.fa.abs(), Relation::Gt, &Int::zero()),
            CheckRecord::ints("|f(a)| < |f(b)|", &values.fa.abs(), Relation::Lt, &values.fb.abs()),
        ];
        cert.pattern = match_pattern(&values.fact_a, &values.fact_b, &values.ga, &values.gb);
        let coprime = values.coprime();
        let mode = self.options.divisors;
        cert.values = Some(values);

        // A pattern pins the admissible quotient, which is the unitary one when both gcds are one.
        let pinned = cert.pattern.clone().filter(|_| mode != DivisorMode::Unitary || coprime);
        if let Some(pattern) = pinned {
            let kind = match mode {
                DivisorMode::Admissible => QuotientKind::Admissible,
                DivisorMode::Unitary => QuotientKind::Unitary,
                DivisorMode::Auto => pattern.id.kind(),
            };
            let q = QuotientBound::forced_one(kind);
            match kind {
                QuotientKind::Admissible => cert.quotient = Some(q.clone()),
                QuotientKind::Unitary => cert.quotient_unitary = Some(q.clone()),
            }
            self.run_clauses(&mut cert, &q)?;
            return Ok(cert);
        }

        let v = cert.values.clone().unwrap();
        let quotient = |kind| quotient_from_factorizations(&v.fact_a, &v.fact_b, &v.ga, &v.gb, kind);
        if mode != DivisorMode::Unitary {
            let q = quotient(QuotientKind::Admissible)?;
            cert.quotient = Some(q.clone());
            if coprime {
                cert.quotient_unitary = Some(quotient(QuotientKind::Unitary)?);
            }
            if self.run_clauses(&mut cert, &q)? {
                return Ok(cert);
            }
        }
        if mode == DivisorMode::Unitary {
            let qu = quotient(QuotientKind::Unitary)?;
            cert.quotient_unitary = Some(qu.clone());
            self.run_clauses(&mut cert, &qu)?;
        }
        Ok(cert)
    }

    /// Push attempts for `q` in clause order, stopping at the first success.
    fn run_clauses(&self, cert: &mut Certificate, q: &QuotientBound) -> Result<bool> {
        let (a, b, v) = (cert.a.clone().unwrap(), cert.b.clone().unwrap(), cert.values.clone().unwrap());
        let setting = Setting { f: &self.f, a: &a, b: &b, q: &q.value, bound: &self.bound, ga: &v.ga, gb: &v.gb };
        for &criterion in clause_order(q.kind == QuotientKind::Unitary, q.is_one()) {
            let attempt = theorems::attempt(criterion, &setting, &mut || self.rational_root_count())?;
            let won = attempt.succeeded;
            cert.attempts.push(attempt);
            if won {
                cert.criterion = Some(criterion);
                cert.verdict = Verdict::Irreducible;
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Prime and prime-power value routes at the single point `b`.
    pub fn certify_prime_value(&self, b: &Int) -> Result<Certificate> {
        if self.f.degree() == Some(1) {
            return Ok(self.degree_one());
        }
        let fb = self.f.eval(b);
        if fb.is_zero() {
            return Err(Error::PreconditionViolated(format!("f({b}) = 0")));
        }
        let effort = self.options.effort;
        let mut tried = Vec::new();
        let zero = Int::zero();
        let sign = if b.is_negative() { -Int::one() } else { Int::one() };
        let routes: [(CriterionId, Vec<Int>); 3] = [
            (CriterionId::CorCoro2, vec![zero.clone()]),
            (CriterionId::CorEk2, vec![sign.clone(), zero.clone(), -sign]),
            (CriterionId::CorCorovechi, vec![zero]),
        ];
        for (corollary, partners) in routes {
            let side = theorems::corollary_attempt(corollary, &self.f, b, effort)?;
            if !side.succeeded {
                tried.push(side);
                continue;
            }
            for a in &partners {
                let cert = match self.certify(a, b) {
                    Ok(cert) => cert,
                    Err(Error::PreconditionViolated(_)) => continue,
                    Err(e) => return Err(e),
                };
                if cert.is_irreducible() && cert.b.as_ref() == Some(b) {
                    let mut cert = cert;
                    cert.attempts.insert(0, side);
                    cert.corollary = Some(corollary);
                    return Ok(cert);
                }
            }
            tried.push(side);
        }
        let mut cert = Certificate::empty(&self.f, self.notes());
        cert.b = Some(b.clone());
        cert.attempts = tried;
        Ok(cert)
    }
}

/// Certify `f` from the pair `(a, b)`.
pub fn certify(f: &UniPoly, a: &Int, b: &Int, options: CertifyOptions) -> Result<Certificate> {
    Certifier::new(f, options)?.certify(a, b)
}

/// Certify `f` from the primality (or prime-power shape) of `|f(b)|`.
pub fn certify_prime_value(f: &UniPoly, b: &Int, options: CertifyOptions) -> Result<Certificate> {
    Certifier::new(f, options)?.certify_prime_value(b)
}

/// Whether `|f(b)|` is prime, without building a certificate.
pub fn is_prime_value(f: &UniPoly, b: &Int, effort: u64) -> Result<bool> {
    let v = f.eval(b);
    if v.is_zero() {
        return Ok(false);
    }
    let fact = factorize(&v, effort)?;
    Ok(fact.factors.len() == 1 && fact.factors[0].exponent == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::criteria::PatternId;

    fn opts() -> CertifyOptions {
        CertifyOptions::default()
    }

    fn check(f: &[i64], a: i64, b: i64) -> Result<Certificate> {
        certify(&UniPoly::from_i64(f), &int(a), &int(b), opts())
    }

    #[test]
    fn worked_instances() {
        let cert = check(&[11, 1, 109], 0, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.criterion, Some(CriterionId::Thm1III));
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));

        let cert = check(&[-7, -1, 43], 0, 1).unwrap();
        assert!(cert.is_irreducible());
        assert_eq!(cert.pattern.as_ref().unwrap().id, PatternId::Coro1MainII);
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));

        let cert = check(&[-3, 0, -1, -1, 1, -4, 254], 0, 2).unwrap();
        assert!(cert.is_irreducible());
        let v = cert.values.as_ref().unwrap();
        assert_eq!(v.fb, int(16129));
        assert_eq!(v.dfb, int(48464));
        assert_eq!(cert.pattern.as_ref().unwrap().id, PatternId::CoroVechi);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(check(&[1, 1, 1, 1], -1, -2), Err(Error::PreconditionViolated(_))));
        assert!(matches!(check(&[3, 0, 1], 1, -1), Err(Error::PreconditionViolated(_))));
        assert!(matches!(check(&[3, 0, 1], 2, 2), Err(Error::PreconditionViolated(_))));
        assert!(matches!(check(&[5], 0, 1), Err(Error::PreconditionViolated(_))));
        assert!(matches!(check(&[], 0, 1), Err(Error::PreconditionViolated(_))));
        let cert = check(&[3, 2], 0, 1).unwrap();
        assert_eq!(cert.criterion, Some(CriterionId::DegreeOne));
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));
    }

    #[test]
    fn orientation_is_automatic() {
        let fwd = check(&[11, 1, 109], 0, 1).unwrap();
        let rev = check(&[11, 1, 109], 1, 0).unwrap();
        assert_eq!(fwd, rev);
    }

    #[test]
    fn prime_values() {
        let f = UniPoly::from_i64(&[1, 1, 7]);
        let cert = certify_prime_value(&f, &int(2), opts()).unwrap();
        assert!(cert.is_irreducible());
        assert_eq!(cert.corollary, Some(CriterionId::CorCoro2));
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));

        let f = UniPoly::from_i64(&[1, 1, 1, 1]);
        let cert = certify_prime_value(&f, &int(-2), opts()).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.reverify(), Ok(Verdict::Inconclusive));
        let ek = cert.attempts.iter().find(|a| a.criterion == CriterionId::CorEk2).unwrap();
        assert!(ek.checks.iter().any(|c| c.label == "f(-1)" && !c.holds));

        let f = UniPoly::from_i64(&[3, 2]);
        assert!(certify_prime_value(&f, &int(1), opts()).unwrap().is_irreducible());

        let f = UniPoly::from_i64(&[-3, 0, -1, -1, 1, -4, 254]);
        let cert = certify_prime_value(&f, &int(2), opts()).unwrap();
        assert_eq!(cert.corollary, Some(CriterionId::CorCorovechi));
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));
    }

    #[test]
    fn search_examples() {
        use crate::criteria::search;
        let f = UniPoly::from_i64(&[-3, 0, -1, -1, 1, -4, 254]);
        let cert = search(&f, -2..=2, -3..=3, opts()).unwrap();
        assert!(cert.is_irreducible());
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));

        let cert = search(&UniPoly::from_i64(&[-1, 0, 1]), -3..=3, -3..=3, opts()).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);

        let cert = search(&UniPoly::from_i64(&[1, 1, 1]), 0..=0, 1..=2, opts()).unwrap();
        assert!(cert.is_irreducible());
        assert_eq!((cert.a.clone(), cert.b.clone()), (Some(int(0)), Some(int(1))));
    }

    #[test]
    fn tampering_is_detected() {
        let cert = check(&[11, 1, 109], 0, 1).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.reverify(), Ok(Verdict::Irreducible));

        let mut bad = cert.clone();
        bad.values.as_mut().unwrap().fb = int(122);
        assert!(bad.reverify().is_err());

        let mut bad = cert.clone();
        let last = bad.attempts.last_mut().unwrap();
        last.checks[0].lhs = crate::arith::rat(2, 1);
        assert!(bad.reverify().is_err());

        let mut bad = cert.clone();
        bad.poly = UniPoly::from_i64(&[11, 1, 108]);
        assert!(bad.reverify().is_err());

        let mut bad = check(&[-1, 0, 1], 0, 2).unwrap();
        assert_eq!(bad.verdict, Verdict::Inconclusive);
        bad.verdict = Verdict::Irreducible;
        assert!(bad.reverify().is_err());
    }

    #[test]
    fn unitary_mode() {
        let f = UniPoly::from_i64(&[11, 1, 109]);
        let o = CertifyOptions { divisors: DivisorMode::Unitary, ..opts() };
        let cert = certify(&f, &int(0), &int(1), o).unwrap();
        assert!(cert.is_irreducible());
        assert_eq!(cert.criterion, Some(CriterionId::Thm3III));
        assert_eq!(cert.reverify(), Ok(Verdict::Irreducible));
    }
}
