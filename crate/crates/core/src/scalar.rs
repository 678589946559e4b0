//! The coefficient field: arbitrary-precision rationals.
//!
//! Every computation in this workspace needs exact equality (joinability of
//! critical pairs, exact ranks), so the scalar type is fixed rather than generic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::CoreError;

/// Arbitrary-precision rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// The coefficient field used by polynomials and matrices.
pub type Scalar = Rational;

/// Builds a scalar from a machine integer.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Builds the scalar `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p`.
pub fn parse_scalar(s: &str) -> Result<Scalar, CoreError> {
    let bad = || CoreError::BadScalar(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(p))
        }
    }
}

/// Renders a scalar as `p` or `p/q`.
pub fn format_scalar(v: &Scalar) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
