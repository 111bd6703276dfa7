use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

/// Minimum of `|b - z|^2 - t |a - z|^2` over the closed disk `|z| <= radius`.
///
/// Expanding gives `(1 - t)|z|^2 - 2 (b - t a) Re z + (b^2 - t a^2)`; for `t > 1`
/// both the quadratic and linear parts decrease in `|z|`, so the minimum sits on
/// the boundary at `z = sign(b - t a) * radius`.
pub fn apollonius_margin(a: &Int, b: &Int, t: &Rat, radius: &Rat) -> Rat {
    let a = Rat::from_integer(a.clone());
    let b = Rat::from_integer(b.clone());
    (Rat::one() - t) * radius * radius - Rat::from_integer(2.into()) * (&b - t * &a).abs() * radius
        + (&b * &b - t * &a * &a)
}

/// Whether the closed disk `|z| <= radius` lies strictly inside the Apollonius
/// region `|b - z| > sqrt(t) |a - z|`.
pub fn disk_in_apollonius(a: &Int, b: &Int, t: &Rat, radius: &Rat) -> Result<bool> {
    if t <= &Rat::one() {
        return Err(Error::PreconditionViolated(format!("Apollonius ratio t = {t} must exceed 1")));
    }
    if radius.is_negative() {
        return Err(Error::PreconditionViolated("radius must be nonnegative".into()));
    }
    Ok(apollonius_margin(a, b, t, radius) > Rat::zero())
}
