//! Exact rational scalars.
//!
//! Every scalar in the workbench is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `[+-]digits[/digits]` with a nonzero denominator.
///
/// Whitespace, decimal points, exponents and empty parts are rejected, so
/// the only accepted values are exact fractions.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::RationalFormat(text.to_string());
    let (sign, body) = match text.as_bytes().first() {
        Some(b'-') => (-1, &text[1..]),
        Some(b'+') => (1, &text[1..]),
        _ => (1, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num * sign, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Largest absolute value among `values`, zero for an empty slice.
pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(Rational::zero(), |acc, v| if v > acc { v } else { acc })
}
