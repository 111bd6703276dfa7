use crate::arith::{all_divisors, factorize, Int, DEFAULT_EFFORT};
use crate::error::{Error, Result};
use crate::serde_num;
use crate::unipoly::UniPoly;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Default cap on divisor tuples; enough for degree 8 with coefficients up to 100.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleStatus<P> {
    Irreducible,
    /// `g * h` equals the primitive part, `1 <= deg g <= deg h`.
    Factored { g: P, h: P },
    BudgetExceeded,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Evaluation points used at the largest candidate degree searched.
    pub points_used: usize,
    /// Divisor tuples tried, counting partial tuples abandoned by pruning.
    pub tuples_tried: u64,
    /// Largest candidate factor degree searched.
    pub max_degree_searched: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationResult {
    /// Signed content; the search runs on `f / content`.
    #[serde(with = "serde_num::int")]
    pub content: Int,
    #[serde(flatten)]
    pub status: OracleStatus<UniPoly>,
    pub stats: SearchStats,
}

impl FactorizationResult {
    pub fn is_irreducible(&self) -> bool {
        matches!(self.status, OracleStatus::Irreducible)
    }

    pub fn is_factored(&self) -> bool {
        matches!(self.status, OracleStatus::Factored { .. })
    }
}

/// Sample points `0, 1, -1, 2, -2, ...`.
fn points() -> impl Iterator<Item = Int> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(Int::from)
}

struct Search<'a> {
    f: &'a UniPoly,
    xs: Vec<Int>,
    divisors: Vec<Vec<Int>>,
    lead: Int,
    budget: u64,
    tried: u64,
    /// `table[j][k]` is the divided difference on nodes `j-k..=j`.
    table: Vec<Vec<Int>>,
}

enum Outcome {
    Found(UniPoly),
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, j: usize) -> Outcome {
        let m = self.xs.len() - 1;
        let signs: &[bool] = if j == 0 { &[false] } else { &[false, true] };
        for di in 0..self.divisors[j].len() {
            for &negate in signs {
                self.tried += 1;
                if self.tried > self.budget {
                    return Outcome::OutOfBudget;
                }
                let d = if negate { -&self.divisors[j][di] } else { self.divisors[j][di].clone() };
                // Divided differences of an integer polynomial at integer nodes are integers.
                let mut row = vec![d];
                let mut ok = true;
                for k in 1..=j {
                    let (q, r) = (&row[k - 1] - &self.table[j - 1][k - 1]).div_rem(&(&self.xs[j] - &self.xs[j - k]));
                    if !r.is_zero() {
                        ok = false;
                        break;
                    }
                    row.push(q);
                }
                if !ok {
                    continue;
                }
                if j == m && !row[m].is_zero() && !self.lead.is_multiple_of(&row[m]) {
                    continue;
                }
                self.table.push(row);
                let outcome = if j == m { self.candidate() } else { self.run(j + 1) };
                self.table.pop();
                if !matches!(outcome, Outcome::Exhausted) {
                    return outcome;
                }
            }
        }
        Outcome::Exhausted
    }

    fn candidate(&self) -> Outcome {
        // Newton form: c_0 + c_1 (X - x_0) + c_2 (X - x_0)(X - x_1) + ...
        let mut g = UniPoly::zero();
        let mut basis = UniPoly::constant(Int::one());
        for (k, row) in self.table.iter().enumerate() {
            g = &g + &basis.scale(&row[k]);
            basis = &basis * &UniPoly::linear_root(&self.xs[k]);
        }
        if g.degree().unwrap_or(0) == 0 {
            return Outcome::Exhausted;
        }
        match self.f.div_exact(&g) {
            Some(_) => Outcome::Found(g),
            None => Outcome::Exhausted,
        }
    }
}

/// Search for a nontrivial factor by Kronecker's interpolation method.
///
/// Rational roots are split off first; then for `m = 2..=n/2` every signed
/// tuple of divisors of `f` at `m + 1` points is interpolated and tried.
pub fn kronecker_factor(f: &UniPoly, budget: u64) -> Result<FactorizationResult> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::PreconditionViolated(format!("Kronecker search needs degree at least 2, got {f}")));
    }
    if budget == 0 {
        return Err(Error::PreconditionViolated("budget must be positive".into()));
    }
    let (content, pp) = f.primitive_part();
    let mut stats = SearchStats::default();
    let finish = |g: UniPoly, stats: SearchStats| {
        let (_, g) = g.primitive_part();
        let h = pp.div_exact(&g).expect("factor divides");
        FactorizationResult { content: content.clone(), status: OracleStatus::Factored { g, h }, stats }
    };
    if let Some(r) = pp.rational_roots()?.first() {
        // r = u/v in lowest terms gives the primitive factor vX - u
        let g = UniPoly::new(vec![-r.numer(), r.denom().clone()]);
        stats.max_degree_searched = 1;
        return Ok(finish(g, stats));
    }
    let mut xs = Vec::new();
    let mut divisors = Vec::new();
    let mut pts = points();
    for m in 2..=n / 2 {
        while xs.len() < m + 1 {
            let x = pts.next().expect("infinite");
            let v = pp.eval(&x);
            if v.is_zero() {
                continue;
            }
            divisors.push(all_divisors(&factorize(&v.abs(), DEFAULT_EFFORT)?)?);
            xs.push(x);
        }
        stats.points_used = m + 1;
        stats.max_degree_searched = m;
        let mut search = Search {
            f: &pp,
            xs: xs.clone(),
            divisors: divisors.clone(),
            lead: pp.leading().unwrap().clone(),
            budget: budget - stats.tuples_tried,
            tried: 0,
            table: Vec::new(),
        };
        let outcome = search.run(0);
        stats.tuples_tried += search.tried.min(search.budget);
        match outcome {
            Outcome::Found(g) => {
                let g = if g.leading().unwrap().is_negative() { -&g } else { g };
                return Ok(finish(g, stats));
            }
            Outcome::OutOfBudget => {
                return Ok(FactorizationResult { content: content.clone(), status: OracleStatus::BudgetExceeded, stats })
            }
            Outcome::Exhausted => {}
        }
    }
    Ok(FactorizationResult { content: content.clone(), status: OracleStatus::Irreducible, stats })
}

/// Complete factorization over the integers: signed content times primitive
/// irreducible factors with positive leading coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolyFactorization {
    #[serde(with = "serde_num::int")]
    pub content: Int,
    pub factors: Vec<(UniPoly, u32)>,
}

impl IntPolyFactorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.content.clone()), |acc, (g, e)| {
                (0..*e).fold(acc, |acc, _| &acc * g)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }
}

/// Recursive Kronecker factorization; the budget is shared by all calls.
pub fn factor_integer_poly(f: &UniPoly, budget: u64) -> Result<IntPolyFactorization> {
    if f.is_zero() {
        return Err(Error::PreconditionViolated("cannot factor the zero polynomial".into()));
    }
    let (content, pp) = f.primitive_part();
    let mut remaining = budget;
    let mut pending = vec![pp];
    let mut irreducible: Vec<UniPoly> = Vec::new();
    while let Some(g) = pending.pop() {
        match g.degree() {
            Some(0) => continue,
            Some(1) => {
                irreducible.push(g);
                continue;
            }
            _ => {}
        }
        if remaining == 0 {
            return Err(Error::BudgetExceeded(format!("Kronecker budget of {budget} tuples")));
        }
        let r = kronecker_factor(&g, remaining)?;
        remaining -= r.stats.tuples_tried.min(remaining);
        match r.status {
            OracleStatus::Irreducible => irreducible.push(g),
            OracleStatus::Factored { g, h } => pending.extend([g, h]),
            OracleStatus::BudgetExceeded => {
                return Err(Error::BudgetExceeded(format!("Kronecker budget of {budget} tuples")))
            }
        }
    }
    irreducible.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev())));
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    for g in irreducible {
        match factors.last_mut() {
            Some((h, e)) if *h == g => *e += 1,
            _ => factors.push((g, 1)),
        }
    }
    Ok(IntPolyFactorization { content, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn examples() {
        let r = kronecker_factor(&p(&[1, 5, 6]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::Factored { g: p(&[1, 2]), h: p(&[1, 3]) });
        assert!(kronecker_factor(&p(&[1, 0, 1]), DEFAULT_BUDGET).unwrap().is_irreducible());
        let f = p(&[-3, 0, -1, -1, 1, -4, 254]);
        let r = kronecker_factor(&f, DEFAULT_BUDGET).unwrap();
        assert!(r.is_irreducible(), "{r:?}");
        assert_eq!(r.stats.max_degree_searched, 3);
    }

    #[test]
    fn quadratic_factors_without_roots() {
        // (x^2+1)(x^2+x+2)
        let f = &p(&[1, 0, 1]) * &p(&[2, 1, 1]);
        let r = kronecker_factor(&f.scale(&Int::from(-6)), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.content, Int::from(-6));
        let OracleStatus::Factored { g, h } = r.status else { panic!("{r:?}") };
        assert_eq!(&g * &h, f);
        assert_eq!(g.degree(), Some(2));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(kronecker_factor(&p(&[1, 1]), 10).is_err());
        assert!(kronecker_factor(&p(&[1, 0, 1]), 0).is_err());
        let r = kronecker_factor(&(&p(&[1, 0, 1]) * &p(&[2, 1, 1])), 3).unwrap();
        assert_eq!(r.status, OracleStatus::BudgetExceeded);
        assert_eq!(r.stats.tuples_tried, 3);
    }

    #[test]
    fn complete_factorization() {
        let f = &(&p(&[0, 1]) * &p(&[0, 1])) * &(&p(&[1, 0, 1]) * &p(&[-2, 0, 0, 4]));
        let fac = factor_integer_poly(&f, DEFAULT_BUDGET).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.content, Int::from(2));
        let shapes: Vec<_> = fac.factors.iter().map(|(g, e)| (g.to_string(), *e)).collect();
        assert_eq!(shapes, vec![("x".into(), 2), ("x^2+1".into(), 1), ("2x^3-1".into(), 1)]);
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-9i64..=9, 2..=4).prop_map(|c| UniPoly::from_i64(&c)).prop_filter("nonconstant", |g| {
            g.degree().unwrap_or(0) >= 1
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(g in small_poly(), h in small_poly()) {
            let f = &g * &h;
            let r = kronecker_factor(&f, DEFAULT_BUDGET).unwrap();
            let OracleStatus::Factored { g: a, h: b } = &r.status else {
                return Err(TestCaseError::fail(format!("{f} not factored: {r:?}")));
            };
            prop_assert_eq!(&(a * b).scale(&r.content), &f);
            prop_assert!(a.degree() <= b.degree());
            prop_assert!(a.content().is_one() && b.content().is_one());
            prop_assert_eq!(kronecker_factor(&f, DEFAULT_BUDGET).unwrap(), r);
        }
    }
}
