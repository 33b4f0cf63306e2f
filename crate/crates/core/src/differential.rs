//! The contract of a quantised `sl2`-differential space.
//!
//! A space carries Lie derivatives `L_x` and contractions `ι_x` for `x` in
//! `sl_q(2) = V_2π` and an odd differential `d`, subject to Cartan's formula
//! `L_x = ι_x d + d ι_x`. Operators are matrices on a fixed basis; `x` is given
//! by its letter (`0, 1, 2` for `v2, v0, vm2`, i.e. `X, Z, Y`).

use crate::algebra::AlgebraError;
use crate::linalg::Matrix;
use crate::scalar::Field;

pub trait DifferentialSpace<F: Field> {
    fn dim(&self) -> usize;

    fn lie_derivative(&self, letter: u8) -> Result<Matrix<F>, AlgebraError>;

    fn contraction(&self, letter: u8) -> Result<Matrix<F>, AlgebraError>;

    fn differential(&self) -> Result<Matrix<F>, AlgebraError>;

    /// `L_x - (ι_x d + d ι_x)`; zero when Cartan's formula holds for `x`.
    fn cartan_defect(&self, letter: u8) -> Result<Matrix<F>, AlgebraError> {
        let d = self.differential()?;
        let iota = self.contraction(letter)?;
        let homotopy = iota.mul(&d).add(&d.mul(&iota));
        Ok(self.lie_derivative(letter)?.sub(&homotopy))
    }

    fn satisfies_cartan(&self) -> Result<bool, AlgebraError> {
        for letter in 0..3 {
            if !self.cartan_defect(letter)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn differential_squares_to_zero(&self) -> Result<bool, AlgebraError> {
        let d = self.differential()?;
        Ok(d.mul(&d).is_zero())
    }
}
