//! Exact rational scalars.
//!
//! All numeric work in this crate happens over arbitrary-precision rationals;
//! nothing is ever rounded. Values serialize as `"p/q"` (or `"p"` when the
//! denominator is 1), which is also what `BigRational`'s `Display` produces.

use std::str::FromStr;

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

use crate::error::{Error, Result};

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or plain `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|e| Error::DegeneratePoint(format!("cannot parse rational {s:?}: {e}")))
}

/// Exact integer power with negative exponents allowed for nonzero bases.
pub fn pow_rational(base: &Rational, exp: i64) -> Result<Rational> {
    use num_traits::Zero;
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::ZeroAtNegativeExponent("<base>".into()));
        }
        return Ok(if exp == 0 { rat(1) } else { rat(0) });
    }
    let e = i32::try_from(exp).map_err(|_| Error::ExponentOverflow(exp))?;
    Ok(base.pow(e))
}
