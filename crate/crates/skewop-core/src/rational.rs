//! Exact rational scalars.
//!
//! Every symbolic quantity in this crate is an arbitrary-precision rational:
//! expansion coefficients, Pochhammer products, Gamma-function ratios.  `Rat`
//! is an alias for `num::BigRational`, which keeps values in lowest terms with
//! a positive denominator, so equality is plain structural equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;

pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as an exact rational.  Panics if `den == 0`; the callers in this
/// crate only pass literal nonzero denominators.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or a bare integer, with optional sign.
///
/// Decimal notation is rejected: a reading of `0.5` as `1/2` would hide the
/// exact-arithmetic contract, so the caller is forced to write `1/2`.
pub fn parse_rat(s: &str) -> Result<Rat, CoreError> {
    let bad = || CoreError::BadRational { input: s.to_string() };
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// Nearest `f64`; values in this crate stay well inside `f64` range.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().expect("rational magnitude exceeds f64 range")
}

/// `x^k` for a small nonnegative exponent.
pub fn rat_pow(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// The integer value of `x`, if `x` is an integer.
pub fn as_integer(x: &Rat) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// True if `x` is an integer `<= 0`, i.e. sits on a Gamma-function pole.
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert_eq!(parse_rat("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-1/2").unwrap(), rat(-1, 2));
        // normalization: sign moves to the numerator, fraction reduced
        assert_eq!(parse_rat("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
    }

    #[test]
    fn parse_rejects_decimals_and_garbage() {
        for s in ["0.5", "1e3", "", "1/0", "a/b", "1/2/3", "--4"] {
            assert!(parse_rat(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let x = rat(1, 3) + rat(1, 6);
        assert_eq!(x, rat(1, 2));
        assert_eq!(rat(1, 2) * rat(2, 3), rat(1, 3));
        assert_eq!(rat(1, 2) - rat(1, 2), Rat::zero());
        assert_eq!(rat(3, 4) / rat(3, 2), rat(1, 2));
    }

    #[test]
    fn pow_and_predicates() {
        assert_eq!(rat_pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(rat_pow(&rat_int(5), 0), rat_int(1));
        assert!(is_nonpositive_integer(&rat_int(0)));
        assert!(is_nonpositive_integer(&rat_int(-4)));
        assert!(!is_nonpositive_integer(&rat_int(2)));
        assert!(!is_nonpositive_integer(&rat(-1, 2)));
        assert_eq!(as_integer(&rat_int(-7)), Some(BigInt::from(-7)));
        assert_eq!(as_integer(&rat(1, 2)), None);
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(rat_to_f64(&rat(1, 4)), 0.25);
        assert_eq!(rat_to_f64(&rat_int(-6)), -6.0);
    }
}
