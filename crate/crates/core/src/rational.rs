//! Exact rationals and the handful of dyadic helpers everything else leans on.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always kept in
//! lowest terms with a positive denominator, so structural equality is
//! value equality. The text form is `<num>/<den>`; integers are accepted on
//! input and always printed with an explicit denominator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ParseError;

pub type Rational = num_rational::BigRational;

/// `2^e` for any (possibly negative) exponent.
pub fn pow2(e: i64) -> Rational {
    let magnitude = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(magnitude)
    } else {
        Rational::new_raw(BigInt::one(), magnitude)
    }
}

/// `r * 2^e`, computed by shifting rather than multiplying.
pub fn mul_pow2(r: &Rational, e: i64) -> Rational {
    let shift = e.unsigned_abs();
    if e >= 0 {
        Rational::new(r.numer() << shift, r.denom().clone())
    } else {
        Rational::new(r.numer().clone(), r.denom() << shift)
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Smallest `e` with `r <= 2^e`. `r` must be positive.
pub fn ceil_log2(r: &Rational) -> i64 {
    assert!(r.is_positive(), "ceil_log2 of a non-positive rational");
    let mut e = r.numer().bits() as i64 - r.denom().bits() as i64;
    while *r > pow2(e) {
        e += 1;
    }
    while *r <= pow2(e - 1) {
        e -= 1;
    }
    e
}

/// `Some(e)` when `r == 2^e` exactly.
pub fn exact_log2(r: &Rational) -> Option<i64> {
    if !r.is_positive() {
        return None;
    }
    let is_pow2 = |n: &BigInt| n.is_positive() && (n & (n - BigInt::one())).is_zero();
    if r.denom().is_one() && is_pow2(r.numer()) {
        Some(r.numer().bits() as i64 - 1)
    } else if r.numer().is_one() && is_pow2(r.denom()) {
        Some(-(r.denom().bits() as i64 - 1))
    } else {
        None
    }
}

/// Wrapper that prints a rational as `<num>/<den>`.
#[derive(Clone, Copy)]
pub struct Fraction<'a>(pub &'a Rational);

impl fmt::Display for Fraction<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

pub fn format_rational(r: &Rational) -> String {
    Fraction(r).to_string()
}

/// Parses `<num>/<den>` or a bare integer. The input need not be reduced;
/// the denominator must be a positive decimal integer.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let (numer, denom) = match text.find('/') {
        Some(slash) => (&text[..slash], Some((slash + 1, &text[slash + 1..]))),
        None => (text, None),
    };
    let numer = parse_integer(numer, 0, true)?;
    let denom = match denom {
        Some((offset, digits)) => parse_integer(digits, offset, false)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseError::new(text.find('/').map_or(0, |s| s + 1), "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

pub(crate) fn parse_integer(text: &str, offset: usize, signed: bool) -> Result<BigInt, ParseError> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if signed => rest,
        _ => text,
    };
    let digits_at = offset + (text.len() - digits.len());
    if digits.is_empty() {
        return Err(ParseError::new(digits_at, "expected a decimal integer"));
    }
    if let Some(bad) = digits.bytes().position(|b| !b.is_ascii_digit()) {
        return Err(ParseError::new(digits_at + bad, "unexpected character in integer"));
    }
    let value: BigInt = digits.parse().expect("validated decimal digits");
    Ok(if digits.len() != text.len() { -value } else { value })
}
