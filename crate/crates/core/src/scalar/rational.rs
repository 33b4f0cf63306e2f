use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, ScalarError};

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}
