use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::Rational;

/// Shorthand: the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand: the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct RationalParseError {
    pub literal: String,
    pub reason: String,
}

/// Parses `"p/q"` or `"p"` into a reduced rational with positive denominator.
///
/// Whitespace is rejected; a zero denominator is rejected. A negative or
/// unreduced denominator on input is normalized, so `"2/-4"` parses to
/// `-1/2`.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let err = |reason: &str| RationalParseError {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty string"));
    }
    if s.chars().any(|c| c.is_whitespace()) {
        return Err(err("whitespace not allowed"));
    }
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap()
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.parse().map_err(|_| err("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as `"p"` (denominator one) or `"p/q"` with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
