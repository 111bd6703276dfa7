use super::quotient::QuotientKind;
use crate::arith::{Int, IntegerFactorization, PrimePower};
use crate::serde_num;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

/// Factorization shapes of `|f(a)|, |f(b)|` that force `q = 1` (or `q_u = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternId {
    /// `|f(a)| = p^k r`, `|f(b)| = p^(k+1)`, `0 < r < p`.
    #[serde(rename = "COR_CORO1MAIN_I")]
    Coro1MainI,
    /// `|f(a)| = p^k`, `|f(b)| = p^k r`, primes `r < p`, `k >= 1`.
    #[serde(rename = "COR_CORO1MAIN_II")]
    Coro1MainII,
    /// `|f(a)| = p^k1 r`, `|f(b)| = p^k2`, `k1 < k2`, `0 < r < p`.
    #[serde(rename = "COR_CORO3MAIN_I")]
    Coro3MainI,
    /// `|f(a)| = p^k`, `|f(b)| = p^k r^j`, `p^k > r^j`.
    #[serde(rename = "COR_CORO3MAIN_II")]
    Coro3MainII,
    /// `|f(a)| = p^u`, `|f(b)| = q^v r^t`, `q^v, r^t < p^u < q^v r^t`.
    #[serde(rename = "COR_CORO3MAIN_III")]
    Coro3MainIII,
    /// `|f(a)| = p^u q^v`, `|f(b)| = r^k s^l`, `p^u > r^k > s^l > q^v`, `p^u q^v < r^k s^l`.
    #[serde(rename = "COR_CORO3MAIN_IV")]
    Coro3MainIV,
    /// `|f(b)| = p^k` with `p` not dividing `f'(b)`.
    #[serde(rename = "COR_COROVECHI")]
    CoroVechi,
}

impl PatternId {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternId::Coro1MainI => "COR_CORO1MAIN_I",
            PatternId::Coro1MainII => "COR_CORO1MAIN_II",
            PatternId::Coro3MainI => "COR_CORO3MAIN_I",
            PatternId::Coro3MainII => "COR_CORO3MAIN_II",
            PatternId::Coro3MainIII => "COR_CORO3MAIN_III",
            PatternId::Coro3MainIV => "COR_CORO3MAIN_IV",
            PatternId::CoroVechi => "COR_COROVECHI",
        }
    }

    /// Which quotient the pattern pins to one.
    pub fn kind(self) -> QuotientKind {
        match self {
            PatternId::Coro3MainI | PatternId::Coro3MainII | PatternId::Coro3MainIII | PatternId::Coro3MainIV => {
                QuotientKind::Unitary
            }
            _ => QuotientKind::Admissible,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub name: String,
    #[serde(with = "serde_num::int")]
    pub value: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub id: PatternId,
    pub binding: Vec<Binding>,
}

impl PatternWitness {
    fn new(id: PatternId, binding: &[(&str, Int)]) -> Self {
        let binding = binding
            .iter()
            .map(|(n, v)| Binding { name: n.to_string(), value: v.clone() })
            .collect();
        PatternWitness { id, binding }
    }

    pub fn get(&self, name: &str) -> Option<&Int> {
        self.binding.iter().find(|b| b.name == name).map(|b| &b.value)
    }
}

fn divides(p: &Int, n: &Int) -> bool {
    (n % p).is_zero()
}

fn power(pp: &PrimePower) -> Int {
    Pow::pow(&pp.prime, pp.exponent)
}

fn single(f: &IntegerFactorization) -> Option<&PrimePower> {
    match f.factors.as_slice() {
        [pp] => Some(pp),
        _ => None,
    }
}

fn pair(f: &IntegerFactorization) -> Option<(&PrimePower, &PrimePower)> {
    match f.factors.as_slice() {
        [x, y] => Some((x, y)),
        _ => None,
    }
}

/// `|f(a)| = p^k r` with `|f(b)| = p^(k+1)` and `0 < r < p`.
fn coro1main_i(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let pb = single(fb)?;
    let p = &pb.prime;
    let k = pb.exponent - 1;
    if fa.exponent_of(p) != k {
        return None;
    }
    let r = fa.abs_value() / Pow::pow(p, k);
    (r < *p).then(|| {
        PatternWitness::new(PatternId::Coro1MainI, &[("p", p.clone()), ("k", k.into()), ("r", r)])
    })
}

/// `|f(a)| = p^k`, `|f(b)| = p^k r` with primes `r < p` and `k >= 1`.
fn coro1main_ii(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let pa = single(fa)?;
    let (x, y) = pair(fb)?;
    let (pk, rr) = if x.prime == pa.prime { (x, y) } else { (y, x) };
    (pk.prime == pa.prime && pk.exponent == pa.exponent && rr.exponent == 1 && rr.prime < pa.prime).then(|| {
        PatternWitness::new(
            PatternId::Coro1MainII,
            &[("p", pa.prime.clone()), ("k", pa.exponent.into()), ("r", rr.prime.clone())],
        )
    })
}

fn coro3main_i(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let pb = single(fb)?;
    let p = &pb.prime;
    let k1 = fa.exponent_of(p);
    if k1 >= pb.exponent {
        return None;
    }
    let r = fa.abs_value() / Pow::pow(p, k1);
    (r < *p).then(|| {
        PatternWitness::new(
            PatternId::Coro3MainI,
            &[("p", p.clone()), ("k1", k1.into()), ("k2", pb.exponent.into()), ("r", r)],
        )
    })
}

fn coro3main_ii(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let pa = single(fa)?;
    let (x, y) = pair(fb)?;
    let (pk, rj) = if x.prime == pa.prime { (x, y) } else { (y, x) };
    (pk.prime == pa.prime && pk.exponent == pa.exponent && power(pa) > power(rj)).then(|| {
        PatternWitness::new(
            PatternId::Coro3MainII,
            &[
                ("p", pa.prime.clone()),
                ("k", pa.exponent.into()),
                ("r", rj.prime.clone()),
                ("j", rj.exponent.into()),
            ],
        )
    })
}

fn coro3main_iii(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let pa = single(fa)?;
    let (x, y) = pair(fb)?;
    if x.prime == pa.prime || y.prime == pa.prime {
        return None;
    }
    let (pu, qv, rt) = (power(pa), power(x), power(y));
    (pu > qv && pu > rt && pu < &qv * &rt).then(|| {
        PatternWitness::new(
            PatternId::Coro3MainIII,
            &[
                ("p", pa.prime.clone()),
                ("u", pa.exponent.into()),
                ("q", x.prime.clone()),
                ("v", x.exponent.into()),
                ("r", y.prime.clone()),
                ("t", y.exponent.into()),
            ],
        )
    })
}

fn coro3main_iv(fa: &IntegerFactorization, fb: &IntegerFactorization) -> Option<PatternWitness> {
    let (a1, a2) = pair(fa)?;
    let (b1, b2) = pair(fb)?;
    if [&b1.prime, &b2.prime].iter().any(|p| **p == a1.prime || **p == a2.prime) {
        return None;
    }
    // the inequality chain fixes the labelling: p^u is the largest power, q^v the smallest
    let (p, q) = if power(a1) > power(a2) { (a1, a2) } else { (a2, a1) };
    let (r, s) = if power(b1) > power(b2) { (b1, b2) } else { (b2, b1) };
    let (pu, qv, rk, sl) = (power(p), power(q), power(r), power(s));
    (pu > rk && rk > sl && sl > qv && &pu * &qv < &rk * &sl).then(|| {
        PatternWitness::new(
            PatternId::Coro3MainIV,
            &[
                ("p", p.prime.clone()),
                ("u", p.exponent.into()),
                ("q", q.prime.clone()),
                ("v", q.exponent.into()),
                ("r", r.prime.clone()),
                ("k", r.exponent.into()),
                ("s", s.prime.clone()),
                ("l", s.exponent.into()),
            ],
        )
    })
}

fn corovechi(fb: &IntegerFactorization, gb: &Int) -> Option<PatternWitness> {
    let pb = single(fb)?;
    (!divides(&pb.prime, gb)).then(|| {
        PatternWitness::new(PatternId::CoroVechi, &[("p", pb.prime.clone()), ("k", pb.exponent.into())])
    })
}

/// First factorization pattern (in a fixed order) that pins the quotient to one.
///
/// `ga = gcd(f(a), f'(a))` and `gb = gcd(f(b), f'(b))`; since `p | f(a)`, the
/// condition `p ∤ f'(a)` is the same as `p ∤ ga`. The unitary patterns are only
/// reported when both gcds are one, which is the hypothesis their proof rests on.
pub fn match_pattern(
    fa: &IntegerFactorization,
    fb: &IntegerFactorization,
    ga: &Int,
    gb: &Int,
) -> Option<PatternWitness> {
    let (va, vb) = (fa.abs_value(), fb.abs_value());
    if va.is_zero() || va >= vb {
        return None;
    }
    let coprime = ga.is_one() && gb.is_one();
    coro1main_i(fa, fb)
        .or_else(|| coro1main_ii(fa, fb))
        .or_else(|| corovechi(fb, gb))
        .or_else(|| coprime.then(|| coro3main_i(fa, fb)).flatten())
        .or_else(|| coprime.then(|| coro3main_ii(fa, fb)).flatten())
        .or_else(|| coprime.then(|| coro3main_iii(fa, fb)).flatten())
        .or_else(|| coprime.then(|| coro3main_iv(fa, fb)).flatten())
}
