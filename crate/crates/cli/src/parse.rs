//! Polynomial expressions in `x` and `y` with integer coefficients.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`, `(x)(y)`) is rejected.

use irreducibility::arith::Int;
use irreducibility::bivar::BiPoly;
use irreducibility::fieldpoly::{Field, Poly};
use irreducibility::unipoly::UniPoly;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset, zero based.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: expected ", self.position)?;
        match self.expected.as_slice() {
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

/// Sparse polynomial: `(deg_x, deg_y) -> coefficient`, zero terms dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyExpr {
    terms: BTreeMap<(usize, usize), Int>,
}

impl PolyExpr {
    pub fn constant(c: Int) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Int, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        PolyExpr { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Int> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_y(&self) -> bool {
        self.terms.keys().any(|&(_, j)| j > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let e = terms.entry(*k).or_insert_with(Int::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        PolyExpr { terms }
    }

    pub fn neg(&self) -> Self {
        PolyExpr { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PolyExpr::default();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &other.terms {
                out = out.add(&Self::monomial(a * b, i1 + i2, j1 + j2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Int::one()), |acc, _| acc.mul(self))
    }

    /// `None` when `y` occurs.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        if self.has_y() {
            return None;
        }
        let n = self.terms.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut c = vec![Int::zero(); n];
        for ((i, _), v) in &self.terms {
            c[*i] = v.clone();
        }
        Some(UniPoly::new(c))
    }

    pub fn from_unipoly(f: &UniPoly) -> Self {
        let terms = f
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((i, 0), c.clone()))
            .collect();
        PolyExpr { terms }
    }

    /// `None` when `y` occurs.
    pub fn to_field_poly<F: Field>(&self, field: F) -> Option<Poly<F>> {
        self.to_unipoly().map(|u| Poly::from_ints(field, u.coeffs()))
    }

    pub fn to_bipoly<F: Field>(&self, field: F) -> BiPoly<F> {
        let terms: Vec<_> = self.terms.iter().map(|((i, j), c)| (c.clone(), *i, *j)).collect();
        BiPoly::from_terms(field, &terms)
    }
}

/// Canonical text: terms by descending `y` degree then `x` degree, explicit `*`.
impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
        for (n, k) in keys.iter().enumerate() {
            let c = &self.terms[k];
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if !c.abs().is_one() || *k == (0, 0) {
                parts.push(c.abs().to_string());
            }
            for (var, e) in [("x", k.0), ("y", k.1)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    depth: usize,
}

const OPERAND: &[&str] = &["integer", "'x'", "'y'", "'('", "'+'", "'-'"];

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.pos
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError { position: self.offset(), expected: expected.to_vec(), found }
    }

    fn integer(&mut self) -> Option<Int> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let (a, _) = self.chars[start];
        let b = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        Some(self.src[a..b].parse().expect("digits"))
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        let out = if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.offset();
            let Some(e) = self.integer() else { return Err(self.error(&["nonnegative integer exponent"])) };
            match e.to_u32().filter(|&e| e <= MAX_EXPONENT) {
                Some(e) => base.pow(e),
                None => {
                    return Err(ParseError {
                        position: at,
                        expected: vec!["exponent at most 256"],
                        found: e.to_string(),
                    })
                }
            }
        } else {
            base
        };
        // Anything that could start an operand here would be juxtaposition.
        if let Some(c) = self.peek() {
            let closing = c == ')' && self.depth > 0;
            if !(matches!(c, '+' | '-' | '*') || closing) {
                let mut expected = vec!["'+'", "'-'", "'*'"];
                if self.depth > 0 {
                    expected.push("')'");
                } else {
                    expected.push("end of input");
                }
                return Err(self.error(&expected));
            }
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(PolyExpr::monomial(Int::one(), 1, 0))
            }
            Some('y') => {
                self.pos += 1;
                Ok(PolyExpr::monomial(Int::one(), 0, 1))
            }
            Some('(') => {
                self.pos += 1;
                self.depth += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(&["')'", "'+'", "'-'", "'*'"]));
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyExpr::constant(self.integer().expect("digit"))),
            _ => Err(self.error(OPERAND)),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, src: text, depth: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_inputs() {
        let f = parse_poly("254*x^6 - 4*x^5 + x^4 - x^3 - x^2 - 3").unwrap();
        assert_eq!(f.to_unipoly().unwrap(), UniPoly::from_i64(&[-3, 0, -1, -1, 1, -4, 254]));
        assert_eq!(f.to_string(), "254*x^6 - 4*x^5 + x^4 - x^3 - x^2 - 3");
        assert_eq!(parse_poly("x").unwrap().to_unipoly().unwrap(), UniPoly::from_i64(&[0, 1]));
        let g = parse_poly("3 + 2*x*y + (9*x+4)*y^2 + 3*x*y^3 + x^2*y^4").unwrap();
        assert!(g.has_y());
        assert_eq!(g.to_string(), "x^2*y^4 + 3*x*y^3 + 9*x*y^2 + 4*y^2 + 2*x*y + 3");
        assert_eq!(parse_poly("-(x-1)^2").unwrap().to_string(), "-x^2 + 2*x - 1");
        assert_eq!(parse_poly(" 2 ^ 3 ").unwrap().to_string(), "8");
        assert_eq!(parse_poly("x - x").unwrap().to_string(), "0");
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let e = parse_poly("2x").unwrap_err();
        assert_eq!(e.position, 1);
        assert!(e.expected.contains(&"'*'"));
        let e = parse_poly("x^-1").unwrap_err();
        assert_eq!(e.position, 2);
        assert_eq!(e.expected, vec!["nonnegative integer exponent"]);
        let e = parse_poly("(x+1").unwrap_err();
        assert_eq!((e.position, e.found.as_str()), (4, "end of input"));
        let e = parse_poly("").unwrap_err();
        assert_eq!(e.expected, OPERAND.to_vec());
        assert!(parse_poly("x*z").is_err());
        assert!(parse_poly("(x)(y)").is_err());
        assert!(parse_poly("x^2^3").is_err());
        assert!(parse_poly("x^1000").is_err());
        assert!(parse_poly("1/2").is_err());
    }
}
