use super::pattern::{match_pattern, PatternWitness};
use super::quotient::{quotient_from_factorizations, QuotientBound, QuotientKind, QuotientSource};
use super::theorems;
use super::DivisorMode;
use crate::arith::{factorize, Int, IntegerFactorization, Rat, RHO_SEED};
use crate::error::{Error, Result};
use crate::serde_num;
use crate::unipoly::{root_bounds, BoundSource, RootBound, UniPoly};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Identifiers of the criteria a certificate can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CriterionId {
    #[serde(rename = "DEGREE_ONE")]
    DegreeOne,
    #[serde(rename = "THM0_I")]
    Thm0I,
    #[serde(rename = "THM0_II")]
    Thm0II,
    #[serde(rename = "THM0_III")]
    Thm0III,
    #[serde(rename = "THM1_I")]
    Thm1I,
    #[serde(rename = "THM1_II")]
    Thm1II,
    #[serde(rename = "THM1_III")]
    Thm1III,
    #[serde(rename = "THM0UNITARY_I")]
    Thm0UnitaryI,
    #[serde(rename = "THM0UNITARY_II")]
    Thm0UnitaryII,
    #[serde(rename = "THM0UNITARY_III")]
    Thm0UnitaryIII,
    #[serde(rename = "THM3_I")]
    Thm3I,
    #[serde(rename = "THM3_II")]
    Thm3II,
    #[serde(rename = "THM3_III")]
    Thm3III,
    #[serde(rename = "COR_CORO2")]
    CorCoro2,
    #[serde(rename = "COR_EK2")]
    CorEk2,
    #[serde(rename = "COR_COROVECHI")]
    CorCorovechi,
    #[serde(rename = "THM5")]
    Thm5,
    #[serde(rename = "COR_CORO6")]
    CorCoro6,
    #[serde(rename = "THM7")]
    Thm7,
    #[serde(rename = "COR_CORO8")]
    CorCoro8,
}

impl CriterionId {
    pub fn as_str(self) -> &'static str {
        use CriterionId::*;
        match self {
            DegreeOne => "DEGREE_ONE",
            Thm0I => "THM0_I",
            Thm0II => "THM0_II",
            Thm0III => "THM0_III",
            Thm1I => "THM1_I",
            Thm1II => "THM1_II",
            Thm1III => "THM1_III",
            Thm0UnitaryI => "THM0UNITARY_I",
            Thm0UnitaryII => "THM0UNITARY_II",
            Thm0UnitaryIII => "THM0UNITARY_III",
            Thm3I => "THM3_I",
            Thm3II => "THM3_II",
            Thm3III => "THM3_III",
            CorCoro2 => "COR_CORO2",
            CorEk2 => "COR_EK2",
            CorCorovechi => "COR_COROVECHI",
            Thm5 => "THM5",
            CorCoro6 => "COR_CORO6",
            Thm7 => "THM7",
            CorCoro8 => "COR_CORO8",
        }
    }

    /// The quotient a univariate theorem clause is stated with.
    pub fn quotient_kind(self) -> Option<QuotientKind> {
        use CriterionId::*;
        match self {
            Thm0I | Thm0II | Thm0III | Thm1I | Thm1II | Thm1III => Some(QuotientKind::Admissible),
            Thm0UnitaryI | Thm0UnitaryII | Thm0UnitaryIII | Thm3I | Thm3II | Thm3III => {
                Some(QuotientKind::Unitary)
            }
            _ => None,
        }
    }

    pub fn is_prime_value_corollary(self) -> bool {
        matches!(self, CriterionId::CorCoro2 | CriterionId::CorEk2 | CriterionId::CorCorovechi)
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    pub fn eval(self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One exact comparison `lhs relation rhs` with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub label: String,
    #[serde(with = "serde_num::rat")]
    pub lhs: Rat,
    pub relation: Relation,
    #[serde(with = "serde_num::rat")]
    pub rhs: Rat,
    pub holds: bool,
}

impl CheckRecord {
    pub fn new(label: impl Into<String>, lhs: Rat, relation: Relation, rhs: Rat) -> Self {
        let holds = relation.eval(&lhs, &rhs);
        CheckRecord { label: label.into(), lhs, relation, rhs, holds }
    }

    pub fn ints(label: impl Into<String>, lhs: &Int, relation: Relation, rhs: &Int) -> Self {
        Self::new(label, Rat::from_integer(lhs.clone()), relation, Rat::from_integer(rhs.clone()))
    }

    pub fn recheck(&self) -> bool {
        self.relation.eval(&self.lhs, &self.rhs)
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.label,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds { "ok" } else { "fails" }
        )
    }
}

/// One criterion tried, with every comparison it made.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub criterion: CriterionId,
    /// The quotient the clause was evaluated with, when it uses one.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_num::opt_rat")]
    pub q: Option<Rat>,
    pub checks: Vec<CheckRecord>,
    pub succeeded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Attempt {
    pub fn new(criterion: CriterionId, q: Option<Rat>, checks: Vec<CheckRecord>, detail: Option<String>) -> Self {
        let succeeded = !checks.is_empty() && checks.iter().all(|c| c.holds);
        Attempt { criterion, q, checks, succeeded, detail }
    }

    pub fn passed_checks(&self) -> usize {
        self.checks.iter().filter(|c| c.holds).count()
    }
}

/// The evaluated data a univariate certificate rests on, after orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Values {
    #[serde(with = "serde_num::int")]
    pub fa: Int,
    #[serde(with = "serde_num::int")]
    pub fb: Int,
    #[serde(with = "serde_num::int")]
    pub dfa: Int,
    #[serde(with = "serde_num::int")]
    pub dfb: Int,
    /// `gcd(f(a), f'(a))`
    #[serde(with = "serde_num::int")]
    pub ga: Int,
    #[serde(with = "serde_num::int")]
    pub gb: Int,
    pub fact_a: IntegerFactorization,
    pub fact_b: IntegerFactorization,
}

impl Values {
    pub fn compute(f: &UniPoly, a: &Int, b: &Int, effort: u64) -> Result<Self> {
        let df = f.derivative();
        let (fa, fb) = (f.eval(a), f.eval(b));
        let (dfa, dfb) = (df.eval(a), df.eval(b));
        Ok(Values {
            ga: fa.gcd(&dfa),
            gb: fb.gcd(&dfb),
            fact_a: factorize(&fa, effort)?,
            fact_b: factorize(&fb, effort)?,
            fa,
            fb,
            dfa,
            dfb,
        })
    }

    pub fn coprime(&self) -> bool {
        self.ga == Int::from(1) && self.gb == Int::from(1)
    }

    fn consistent(&self, f: &UniPoly, a: &Int, b: &Int) -> bool {
        let df = f.derivative();
        self.fa == f.eval(a)
            && self.fb == f.eval(b)
            && self.dfa == df.eval(a)
            && self.dfb == df.eval(b)
            && self.ga == self.fa.gcd(&self.dfa)
            && self.gb == self.fb.gcd(&self.dfb)
            && self.fact_a.value() == self.fa
            && self.fact_b.value() == self.fb
            && self.fact_a.is_canonical()
            && self.fact_b.is_canonical()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Irreducible,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodNotes {
    pub effort: u64,
    pub rho_seed: u64,
    pub divisor_mode: DivisorMode,
}

impl MethodNotes {
    pub fn new(effort: u64, divisor_mode: DivisorMode) -> Self {
        MethodNotes { effort, rho_seed: RHO_SEED, divisor_mode }
    }
}

/// Self-contained record of a univariate irreducibility argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    /// Theorem clause that fired.
    pub criterion: Option<CriterionId>,
    /// Prime-value corollary the theorem clause was reached through.
    pub corollary: Option<CriterionId>,
    pub poly: UniPoly,
    #[serde(with = "serde_num::opt_int")]
    pub a: Option<Int>,
    #[serde(with = "serde_num::opt_int")]
    pub b: Option<Int>,
    pub values: Option<Values>,
    pub pattern: Option<PatternWitness>,
    pub quotient: Option<QuotientBound>,
    pub quotient_unitary: Option<QuotientBound>,
    pub bound: Option<RootBound>,
    pub preconditions: Vec<CheckRecord>,
    pub attempts: Vec<Attempt>,
    pub notes: MethodNotes,
}

impl Certificate {
    pub(crate) fn empty(f: &UniPoly, notes: MethodNotes) -> Self {
        Certificate {
            verdict: Verdict::Inconclusive,
            criterion: None,
            corollary: None,
            poly: f.clone(),
            a: None,
            b: None,
            values: None,
            pattern: None,
            quotient: None,
            quotient_unitary: None,
            bound: None,
            preconditions: Vec::new(),
            attempts: Vec::new(),
            notes,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }

    pub fn passed_checks(&self) -> usize {
        self.attempts.iter().map(Attempt::passed_checks).sum()
    }

    pub fn all_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.preconditions.iter().chain(self.attempts.iter().flat_map(|a| a.checks.iter()))
    }

    /// The quotient bound the winning (or last) clause used.
    pub fn quotient_for(&self, kind: QuotientKind) -> Option<&QuotientBound> {
        match kind {
            QuotientKind::Admissible => self.quotient.as_ref(),
            QuotientKind::Unitary => self.quotient_unitary.as_ref(),
        }
    }

    /// Recompute every recorded value and comparison from the certificate's own
    /// fields and return the verdict they support.
    pub fn reverify(&self) -> Result<Verdict> {
        let fail = |msg: String| Err(Error::Reverify(msg));
        for c in self.all_checks() {
            if c.recheck() != c.holds {
                return fail(format!("recorded outcome of '{}' is wrong", c.label));
            }
        }
        for att in &self.attempts {
            if att.succeeded != (!att.checks.is_empty() && att.checks.iter().all(|c| c.holds)) {
                return fail(format!("attempt {} misreports success", att.criterion));
            }
        }
        if !self.preconditions.iter().all(|c| c.holds) && self.verdict == Verdict::Irreducible {
            return fail("precondition failed on an irreducible certificate".into());
        }
        let degree = self.poly.degree();
        if degree == Some(1) && self.criterion == Some(CriterionId::DegreeOne) {
            let rebuilt = theorems::degree_one_attempt(&self.poly);
            if self.attempts != [rebuilt] {
                return fail("degree-one record altered".into());
            }
            return self.expect(Verdict::Irreducible);
        }
        if let Some(bound) = &self.bound {
            if !bound_is_valid(&self.poly, bound) {
                return fail("root bound is not certified".into());
            }
        }
        if let (Some(a), Some(b), Some(v)) = (&self.a, &self.b, &self.values) {
            if a == b || !v.consistent(&self.poly, a, b) {
                return fail("stored values do not match the polynomial".into());
            }
            if v.fa.is_zero() || v.fa.abs() >= v.fb.abs() {
                return fail("orientation 0 < |f(a)| < |f(b)| violated".into());
            }
            if match_pattern(&v.fact_a, &v.fact_b, &v.ga, &v.gb) != self.pattern {
                return fail("pattern does not match the factorizations".into());
            }
            for (kind, stored) in [
                (QuotientKind::Admissible, &self.quotient),
                (QuotientKind::Unitary, &self.quotient_unitary),
            ] {
                let Some(q) = stored else { continue };
                if q.kind != kind || !q.witness_holds(&v.fa, &v.fb) {
                    return fail(format!("{kind:?} quotient witness invalid"));
                }
                let fresh = match q.source {
                    QuotientSource::Enumerated => {
                        quotient_from_factorizations(&v.fact_a, &v.fact_b, &v.ga, &v.gb, kind)?
                    }
                    QuotientSource::Pattern if self.pattern.is_some() => QuotientBound::forced_one(kind),
                    QuotientSource::Pattern => return fail("pattern quotient without a pattern".into()),
                };
                if &fresh != q {
                    return fail(format!("{kind:?} quotient does not recompute"));
                }
            }
        }
        for att in &self.attempts {
            let rebuilt = if att.criterion.is_prime_value_corollary() {
                let Some(b) = &self.b else { return fail("corollary without a point".into()) };
                theorems::corollary_attempt(att.criterion, &self.poly, b, self.notes.effort)?
            } else if let Some(kind) = att.criterion.quotient_kind() {
                let (Some(a), Some(b), Some(v), Some(bound)) = (&self.a, &self.b, &self.values, &self.bound)
                else {
                    return fail(format!("attempt {} lacks its inputs", att.criterion));
                };
                let Some(q) = self.quotient_for(kind) else {
                    return fail(format!("attempt {} has no quotient", att.criterion));
                };
                if att.q.as_ref() != Some(&q.value) {
                    return fail(format!("attempt {} used a different quotient", att.criterion));
                }
                let ctx = theorems::Setting { f: &self.poly, a, b, q: &q.value, bound, ga: &v.ga, gb: &v.gb };
                theorems::attempt(att.criterion, &ctx, &mut || theorems::rational_root_count(&self.poly))?
            } else {
                return fail(format!("unexpected criterion {}", att.criterion));
            };
            if &rebuilt != att {
                return fail(format!("attempt {} does not recompute", att.criterion));
            }
        }
        let theorem_ok = self.criterion.is_some_and(|c| {
            c.quotient_kind().is_some() && self.attempts.iter().any(|a| a.criterion == c && a.succeeded)
        });
        let corollary_ok = self
            .corollary
            .map_or(true, |c| self.attempts.iter().any(|a| a.criterion == c && a.succeeded));
        let preconditions_ok = !self.preconditions.is_empty() && self.preconditions.iter().all(|c| c.holds);
        let supported = if theorem_ok && corollary_ok && preconditions_ok {
            Verdict::Irreducible
        } else {
            Verdict::Inconclusive
        };
        self.expect(supported)
    }

    fn expect(&self, supported: Verdict) -> Result<Verdict> {
        if supported == self.verdict {
            Ok(supported)
        } else {
            Err(Error::Reverify(format!("recorded verdict {} but the checks support {}", self.verdict, supported)))
        }
    }
}

/// Whether a recorded bound can be re-derived for `f`.
pub fn bound_is_valid(f: &UniPoly, bound: &RootBound) -> bool {
    match bound.source {
        BoundSource::Rouche => bound.strict && f.rouche_all_roots_inside(&bound.value),
        _ => root_bounds(f).contains(bound),
    }
}
