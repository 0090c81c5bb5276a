//! Exact rational scalars and their canonical text form.
//!
//! Every exact computation in this crate runs on [`Rational`], an
//! arbitrary-precision fraction kept in canonical form (positive
//! denominator, gcd-reduced) after every operation. The text form is
//! `"p/q"` with `"p"` alone when the denominator is one; `"2/4"` parses
//! to `1/2` and a zero denominator is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for small rationals in tests and fixtures.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(numer_str.to_string()))?;
    let denom: BigInt = match denom_str {
        Some(d) => d
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(d.to_string()))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `"p"` when the denominator is one, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_point(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    s.split(',').map(parse_rational).collect()
}

pub fn format_point(p: &[Rational]) -> String {
    let coords: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", coords.join(","))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}
