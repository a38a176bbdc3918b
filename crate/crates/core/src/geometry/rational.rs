use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `numer / denom`. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses an optionally signed integer, a fraction `a/b` with `b > 0`, or an
/// exact decimal such as `-0.125`. Decimals are converted without any
/// floating-point step.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(text.to_string());
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_integer(num).ok_or_else(bad)?;
        if !den.bytes().all(|b| b.is_ascii_digit()) || den.is_empty() {
            return Err(bad());
        }
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        let int = parse_integer(int_part).ok_or_else(bad)?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let negative = int_part.starts_with('-');
        let magnitude = Rational::from_integer(num_traits::Signed::abs(&int))
            + Rational::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    parse_integer(text).map(Rational::from_integer).ok_or_else(bad)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') { -value } else { value })
}

pub(crate) fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

pub(crate) fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) * half()
}
