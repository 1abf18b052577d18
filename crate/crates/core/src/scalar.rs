//! Number types the measure code is generic over: `f64` for the floating
//! path and [`Rational`] (arbitrary precision) for the exact path.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Num, One, ToPrimitive, Zero};

use crate::error::{parse_err, Result};

pub type Rational = BigRational;

pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Sum {
    /// `num / den`, exact where the type allows.
    fn ratio(num: u64, den: u64) -> Self;
    fn to_f64(&self) -> f64;
    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
    fn abs_diff(&self, other: &Self) -> Self {
        if self > other {
            self.clone() - other.clone()
        } else {
            other.clone() - self.clone()
        }
    }
}

impl Scalar for f64 {
    fn ratio(num: u64, den: u64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn ratio(num: u64, den: u64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// A parsed numeric token. Decimal and fraction literals are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Number {
    pub value: f64,
    pub exact: Rational,
    /// Token was written as a fraction `a/b`.
    pub fraction: bool,
}

/// Parses `3`, `0.25`, `-1.5`, `1/3` or `2.5e-3`. `offset` is added to reported error positions.
pub fn parse_number(token: &str, offset: usize) -> Result<Number> {
    let lead = token.len() - token.trim_start().len();
    let t = token.trim();
    let at = offset + lead;
    if t.is_empty() {
        return Err(parse_err(at, "expected a number"));
    }
    if let Some((a, b)) = t.split_once('/') {
        let num = parse_decimal(a.trim(), at)?;
        let den = parse_decimal(b.trim(), at + a.len() + 1)?;
        if den.is_zero() {
            return Err(parse_err(at + a.len() + 1, "zero denominator"));
        }
        let exact = num / den;
        return Ok(Number {
            value: Scalar::to_f64(&exact),
            exact,
            fraction: true,
        });
    }
    let exact = parse_decimal(t, at)?;
    Ok(Number {
        value: Scalar::to_f64(&exact),
        exact,
        fraction: false,
    })
}

fn parse_decimal(t: &str, at: usize) -> Result<Rational> {
    let bad = || parse_err(at, format!("invalid number `{t}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.bytes().chain(frac_part.bytes()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str_radix(&all_digits, 10).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num::pow(ten, scale as usize);
    } else {
        value /= num::pow(ten, (-scale) as usize);
    }
    Ok(if neg { -value } else { value })
}

/// Renders a rational as `a/b`, or `a` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
