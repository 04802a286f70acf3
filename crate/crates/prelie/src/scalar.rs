//! Exact rational scalars.
//!
//! All arithmetic in this crate happens over the rationals. `Scalar` is an
//! arbitrary-precision rational number kept in canonical form (positive
//! denominator, reduced fraction) after every operation, so equality is
//! structural and nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number in canonical form.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics when `q = 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Error raised when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in `{0}`")]
    BadInteger(String),
    #[error("denominator must be a positive integer in `{0}`")]
    BadDenominator(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"p"` with an optional leading sign; `q` must be positive.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| ParseScalarError::BadInteger(s.to_string()))?;
    let denom: BigInt = match den_str {
        None => BigInt::one(),
        Some(d) => {
            let d: BigInt = d
                .parse()
                .map_err(|_| ParseScalarError::BadDenominator(s.to_string()))?;
            if d.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(s.to_string()));
            }
            if d.is_negative() {
                return Err(ParseScalarError::BadDenominator(s.to_string()));
            }
            d
        }
    };
    Ok(BigRational::new(numer, denom))
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
