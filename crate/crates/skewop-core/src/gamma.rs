//! Rising factorials and exact ratios of Gamma functions.
//!
//! Every Gamma quotient in the closed forms has an integer argument
//! difference, so it collapses to a rising factorial:
//!
//!   gamma(b + m) / gamma(b) = b (b+1) ... (b+m-1)
//!
//! which is exact over the rationals.  Poles are handled by value: a quotient
//! whose limit is 0 returns 0, a quotient that diverges is an error.

use num::{One, Zero};

use crate::error::CoreError;
use crate::rational::{as_integer, rat_int, Rat};

/// `base (base+1) ... (base+count-1)`; the empty product (count = 0) is 1.
///
/// The result is 0 exactly when the product walks across a nonpositive
/// integer, i.e. when `base` is an integer with `-count < base <= 0`.
pub fn rising_factorial(base: &Rat, count: usize) -> Rat {
    let mut acc = Rat::one();
    let mut factor = base.clone();
    for _ in 0..count {
        acc *= &factor;
        factor += rat_int(1);
    }
    acc
}

/// `gamma(a) / gamma(b)`, exact.
///
/// `a - b` must be an integer; otherwise the quotient is not rational and the
/// call is rejected.  Pole handling follows the limiting value:
///   - `gamma_ratio(5, 0)  = 0`   (finite numerator over a divergent gamma)
///   - `gamma_ratio(0, 5)` is an error (the quotient itself diverges)
pub fn gamma_ratio(a: &Rat, b: &Rat) -> Result<Rat, CoreError> {
    let diff = as_integer(&(a - b)).ok_or_else(|| CoreError::NonIntegerGammaDifference {
        a: a.clone(),
        b: b.clone(),
    })?;
    let count = match u64::try_from(diff.clone()).ok().and_then(|d| usize::try_from(d).ok()) {
        Some(m) => return Ok(rising_factorial(b, m)),
        None => usize::try_from(-diff).map_err(|_| CoreError::ParameterPole {
            detail: format!("gamma argument difference between {a} and {b} too large"),
        })?,
    };
    let denom = rising_factorial(a, count);
    if denom.is_zero() {
        // gamma(b) is finite here, so a pole of gamma(a) makes the ratio blow up.
        return Err(CoreError::GammaPole { arg: a.clone() });
    }
    Ok(denom.recip())
}
