//! Rational scalars and their text form.
//!
//! Rationals are printed as `p/q` (or `p` when integral) and parsed from the
//! same form. Decimal notation is rejected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn from_int(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

pub fn is_integral(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => f64::NAN,
    }
}

/// `n!` as a rational, for the exponential series.
pub fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * qi(k as i64))
}

/// Largest integer `<= x`.
pub fn floor(x: &Q) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Q) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// A rational upper bound for `sqrt(x)`, `x >= 0`.
pub fn sqrt_upper(x: &Q) -> Q {
    assert!(!x.is_negative(), "sqrt of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q <= (isqrt(p*q) + 1)/q
    let pq = x.numer() * x.denom();
    Q::new(pq.sqrt() + BigInt::one(), x.denom().clone())
}

/// Parse a rational written as `p`, `-p`, `p/q`. `offset` is added to error positions.
pub fn parse_q_at(text: &str, offset: usize) -> Result<Q> {
    let trimmed = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    if trimmed.is_empty() {
        return Err(Error::parse(lead, "empty number"));
    }
    if let Some(i) = trimmed.find(['.', 'e', 'E']) {
        return Err(Error::parse(
            lead + i,
            format!("decimal notation `{trimmed}` is not accepted, write p/q"),
        ));
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (trimmed, None),
    };
    let numer: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::parse(lead, format!("invalid integer `{num}`")))?;
    let denom: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| {
            Error::parse(lead + num.len() + 1, format!("invalid denominator `{d}`"))
        })?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::parse(lead + num.len() + 1, "zero denominator"));
    }
    Ok(Q::new(numer, denom))
}

pub fn parse_q(text: &str) -> Result<Q> {
    parse_q_at(text, 0)
}

/// Split a comma separated list of rationals, tracking positions for errors.
pub fn parse_q_list(text: &str) -> Result<Vec<Q>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        out.push(parse_q_at(field, offset)?);
        offset += field.len() + 1;
    }
    Ok(out)
}

pub(crate) fn serialize_q<S: serde::Serializer>(
    x: &Q,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub(crate) fn serialize_int<S: serde::Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}
