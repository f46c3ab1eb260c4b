//! Exact rational scalars. All arithmetic in this crate is over `Q` with
//! arbitrary-precision integers; floating point is never used.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// The scalar type of every computation: an exact rational number.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d = 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a fraction string such as `3/2`, `-1/3`, or `7`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::InvalidRational("empty string".into()));
    }
    Rational::from_str(t).map_err(|e| Error::InvalidRational(format!("{t:?}: {e}")))
}

/// Fraction-string rendering, e.g. `3/2`, `-1`, `0`. Inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `r^e` for small non-negative exponents.
pub fn rat_pow(r: &Rational, e: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= r;
    }
    out
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
