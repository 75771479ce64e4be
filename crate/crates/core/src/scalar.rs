//! Exact rational scalars and their canonical text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The ground field. Always stored in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q`, reduced. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Strict parser for `p` or `p/q` with `q > 0` and `gcd(|p|, q) = 1`.
///
/// A leading `-` is the only sign accepted. Non-reduced input such as `2/4`
/// is rejected instead of silently normalised.
pub fn parse(text: &str) -> Result<Scalar, Error> {
    let malformed = |reason: &str| Error::MalformedScalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed("numerator is not an integer"));
    }
    if digits.len() > 1 && digits.starts_with('0') || num == "-0" {
        return Err(malformed("not in canonical form"));
    }
    let p: BigInt = num.parse().map_err(|_| malformed("numerator is not an integer"))?;
    let q: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed("denominator is not a positive integer"));
            }
            if d.starts_with('0') {
                return Err(malformed("denominator must be positive, without leading zeros"));
            }
            d.parse()
                .map_err(|_| malformed("denominator is not a positive integer"))?
        }
    };
    if !q.is_positive() {
        return Err(malformed("denominator must be positive"));
    }
    if !p.abs().gcd(&q).is_one() {
        return Err(malformed("not in lowest terms"));
    }
    Ok(Scalar::new_raw(p, q))
}

pub fn checked_div(a: &Scalar, b: &Scalar) -> Result<Scalar, Error> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}
