//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! `Integer` and `Rational` are the `num` big-number types; this module adds
//! the checked constructors, parsing, and the handful of operations the rest
//! of the crate relies on. Nothing here touches floating point.

mod interval;

pub use interval::{Endpoint, IntervalError, RationalInterval};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational {0}/0")]
    ZeroDenominator(Integer),
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Builds `num/den` in lowest terms, rejecting a zero denominator.
pub fn rational(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Rational, ExactError> {
    let (num, den) = (num.into(), den.into());
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator(num));
    }
    Ok(Rational::new(num, den))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Rational from an integer literal.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// Rational `n/d` from machine integers. Panics on `d == 0`; use [`rational`]
/// for untrusted input.
pub fn ratio(n: i64, d: i64) -> Rational {
    rational(n, d).expect("nonzero denominator")
}

pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational, ExactError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}

/// Nonnegative gcd, with `gcd(0, 0) = 0`.
pub fn int_gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

pub fn int_lcm(a: &Integer, b: &Integer) -> Integer {
    if a.is_zero() || b.is_zero() {
        return Integer::zero();
    }
    a.lcm(b)
}

/// Puts an arbitrary numerator/denominator pair into canonical form.
pub fn normalize(r: &Rational) -> Rational {
    Rational::new(r.numer().clone(), r.denom().clone())
}

/// Parses `"n"` or `"p/q"` (optional leading sign, surrounding whitespace).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(s.to_string());
    let text = s.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let parse_int = |t: &str, allow_sign: bool| -> Result<Integer, ExactError> {
        let digits = if allow_sign { t.strip_prefix(['+', '-']).unwrap_or(t) } else { t };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.parse::<Integer>().map_err(|_| err())
    };
    let n = parse_int(num, true)?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some(d) => rational(n, parse_int(d, false)?),
    }
}

/// Canonical text: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `floor(log2 |r|)`-style size used to pick bisection depths; exact for
/// powers of two, never overestimates by more than one.
pub fn abs_bits(r: &Rational) -> i64 {
    if r.is_zero() {
        return i64::MIN;
    }
    r.numer().abs().bits() as i64 - r.denom().bits() as i64
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rat(2)
}

/// `2^-bits` as an exact rational.
pub fn pow2_neg(bits: u32) -> Rational {
    Rational::new(Integer::one(), Integer::one() << bits as usize)
}

/// Serde helper: rationals serialize as their canonical `"p/q"` text.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn serialize_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// Decimal rendering of `r` rounded to `digits` places after the point
/// (round half away from zero).
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(Integer::from(10), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let half = ratio(1, 2);
    let rounded = if scaled.is_negative() {
        -((-scaled + half).floor())
    } else {
        (scaled + half).floor()
    };
    let n = rounded.to_integer();
    let neg = n.is_negative();
    let (q, rem) = n.abs().div_rem(&scale);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&q.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", rem.to_string(), width = digits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat_arith(&ratio(1, 2), &ratio(1, 3), RatOp::Add).unwrap(), ratio(5, 6));
        assert_eq!(rat_arith(&ratio(9, 2), &rat(1), RatOp::Mul).unwrap(), ratio(9, 2));
        assert_eq!(rat_arith(&rat(2005), &rat(36), RatOp::Div).unwrap(), ratio(2005, 36));
        assert_eq!(
            rat_arith(&rat(1), &rat(0), RatOp::Div),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn zero_denominator_rejected_at_construction() {
        assert!(matches!(rational(3, 0), Err(ExactError::ZeroDenominator(_))));
        assert!(parse_rational("3/0").is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(rat_cmp(&ratio(4, 3), &rat(1)), Ordering::Greater);
        assert_eq!(rat_cmp(&ratio(-1, 2), &ratio(-1, 2)), Ordering::Equal);
        // 4 - sqrt(13) > 0 because 13 < 16
        assert_eq!(rat_cmp(&rat(13), &rat(16)), Ordering::Less);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(int_gcd(&int(54), &int(81)), int(27));
        assert_eq!(int_gcd(&int(0), &int(7)), int(7));
        assert_eq!(int_gcd(&int(0), &int(0)), int(0));
        assert_eq!(int_gcd(&int(1000), &int(2600)), int(200));
        assert_eq!(int_gcd(&int(-12), &int(18)), int(6));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&ratio(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&ratio(-5, 2), 0), "-3");
        assert_eq!(to_decimal(&ratio(1, 20), 3), "0.050");
    }
}
