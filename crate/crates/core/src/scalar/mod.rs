//! Coefficient fields.
//!
//! Everything downstream is generic over [`Field`]. Two fields are provided:
//! [`Scalar`], the rational-function field `Q(u, c)` with `q = u^2`, and
//! `BigRational`, used when `q` and `c` are specialised to rational numbers.
//! The values of `q` and `c` live in a [`Params`] value, which is how generic
//! code obtains q-powers, q-integers and the Clifford parameter.

mod gcd;
mod params;
mod poly;
mod rational;
mod rational_function;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

pub use gcd::gcd;
pub use params::{Mode, Params};
pub use poly::{Exponent, MultiPoly};
pub use rational_function::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the requested point")]
    PoleAtPoint,
    #[error("odd power of q^(1/2) at a q that is not a rational square")]
    OddHalfPowerAtNonSquare,
    #[error("invalid specialisation point: {0}")]
    InvalidPoint(String),
    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),
    #[error("expression is not a scalar: {0}")]
    NotAScalar(String),
}

/// A commutative field with exact arithmetic.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Rough size of the representation; elimination prefers small pivots.
    fn complexity(&self) -> usize;

    /// `Some(k)` when `self == q^(k/2)`.
    fn q_half_exponent(&self, params: &Params<Self>) -> Option<i64> {
        params.search_half_exponent(self)
    }
}
