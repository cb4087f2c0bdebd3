//! Exact scalar and polynomial arithmetic plus fraction-free linear algebra.

mod matrix;
mod poly;
mod unipoly;

pub use matrix::ExactMatrix;
pub use poly::{interpolate_homogeneous, ParamPoly};
pub use unipoly::{RationalFunction, UniPoly};

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `num/den`, e.g. `-3/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Exact commutative ring scalar with exact division by nonzero integers.
///
/// Implemented by `Rational` (specialized mode) and `ParamPoly`
/// (symbolic mode).
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;

    /// Exact division by a nonzero integer; used by Faddeev-LeVerrier.
    fn div_int(&self, n: i64) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }

    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self / rat_int(n)
    }
}

/// Scalars forming a field.
pub trait Field: Scalar + std::ops::Div<Output = Self> {
    fn inv(&self) -> Self;

    fn div_ref(&self, other: &Self) -> Self {
        self.clone() / other.clone()
    }

    /// True for strictly positive elements; only meaningful for ordered
    /// fields (used by interlacing and positivity checks).
    fn is_positive_val(&self) -> bool;
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational::one() / self.clone()
    }

    fn is_positive_val(&self) -> bool {
        self.is_positive()
    }
}
