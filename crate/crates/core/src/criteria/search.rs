use super::certificate::{Certificate, MethodNotes};
use super::certify::{CertifyOptions, Certifier};
use crate::arith::Int;
use crate::error::Result;
use crate::unipoly::UniPoly;
use std::ops::RangeInclusive;

/// Scan `a` ascending, then `b` ascending, returning the first irreducible
/// certificate or else the inconclusive one with the most passed checks.
/// Pairs that violate the preconditions or exhaust the budget are skipped.
pub fn search(
    f: &UniPoly,
    a_range: RangeInclusive<i64>,
    b_range: RangeInclusive<i64>,
    options: CertifyOptions,
) -> Result<Certificate> {
    let certifier = Certifier::new(f, options)?;
    let mut best: Option<Certificate> = None;
    for a in a_range {
        for b in b_range.clone() {
            if a == b {
                continue;
            }
            let Ok(cert) = certifier.certify(&Int::from(a), &Int::from(b)) else { continue };
            if cert.is_irreducible() {
                return Ok(cert);
            }
            if best.as_ref().map_or(true, |c| cert.passed_checks() > c.passed_checks()) {
                best = Some(cert);
            }
        }
    }
    Ok(best.unwrap_or_else(|| Certificate::empty(f, MethodNotes::new(options.effort, options.divisors))))
}
