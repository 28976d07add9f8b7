//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in canonical form (reduced, positive denominator) by
//! `num-rational`. Serialization uses the exact string forms `"p"` and
//! `"p/q"`; no floating point appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = num_rational::BigRational;

/// 0 as a scalar.
pub fn zero() -> Scalar {
    Scalar::zero()
}

/// 1 as a scalar.
pub fn one() -> Scalar {
    Scalar::one()
}

/// An integer as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` exactly. Rejects empty input, a zero
/// denominator and anything that is not an integer ratio.
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical string form: `"p"` when the denominator is 1, else `"p/q"`
/// with q > 0. Round-trips exactly through [`parse_scalar`].
pub fn format_scalar(s: &Scalar) -> String {
    debug_assert!(s.denom().is_positive());
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}
