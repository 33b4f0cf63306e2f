//! Cohomology of a finite-dimensional complex given by a single matrix.

use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("the operator does not square to zero")]
    NotADifferential,
    #[error("grading has {grading} entries for an operator on a space of dimension {dim}")]
    GradingMismatch { grading: usize, dim: usize },
}

/// How basis vectors are graded. `Integer` expects `D` to raise degree by one,
/// `Parity` expects `D` to be odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    Integer(Vec<usize>),
    Parity(Vec<usize>),
}

impl Grading {
    fn degrees(&self) -> &[usize] {
        match self {
            Grading::Integer(d) | Grading::Parity(d) => d,
        }
    }

    fn previous(&self, k: usize) -> Option<usize> {
        match self {
            Grading::Integer(_) => k.checked_sub(1),
            Grading::Parity(_) => Some(1 - k),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeCohomology<F> {
    pub degree: usize,
    pub cycles: usize,
    pub boundaries: usize,
    pub betti: usize,
    pub representatives: Vec<Vec<F>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyReport<F> {
    pub degrees: Vec<DegreeCohomology<F>>,
}

impl<F> CohomologyReport<F> {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn total_cycles(&self) -> usize {
        self.degrees.iter().map(|d| d.cycles).sum()
    }

    pub fn total_boundaries(&self) -> usize {
        self.degrees.iter().map(|d| d.boundaries).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(|d| d.betti == 0)
    }
}

/// Kernel and image of `d` degree by degree, with representatives of each class.
pub fn cohomology<F: Field>(d: &Matrix<F>, grading: &Grading) -> Result<CohomologyReport<F>, CohomologyError> {
    let n = d.cols();
    if grading.degrees().len() != n {
        return Err(CohomologyError::GradingMismatch {
            grading: grading.degrees().len(),
            dim: n,
        });
    }
    if !d.mul(d).is_zero() {
        return Err(CohomologyError::NotADifferential);
    }
    let max = grading.degrees().iter().copied().max().unwrap_or(0);
    let rows: Vec<usize> = (0..d.rows()).collect();
    let columns_of = |k: usize| -> Vec<usize> { (0..n).filter(|&i| grading.degrees()[i] == k).collect() };
    let embed = |cols: &[usize], v: Vec<F>| {
        let mut out = vec![F::zero(); n];
        for (c, x) in cols.iter().zip(v) {
            out[*c] = x;
        }
        out
    };
    let mut degrees = Vec::new();
    for k in 0..=max {
        let cols = columns_of(k);
        let cycles: Vec<Vec<F>> = d
            .select(&rows, &cols)
            .kernel()
            .into_iter()
            .map(|v| embed(&cols, v))
            .collect();
        let boundaries: Vec<Vec<F>> = match grading.previous(k) {
            Some(p) => {
                let prev = columns_of(p);
                d.select(&rows, &prev).image_basis()
            }
            None => Vec::new(),
        };
        let mut span = boundaries.clone();
        let mut representatives = Vec::new();
        for z in &cycles {
            span.push(z.clone());
            if Matrix::from_columns(n, &span).rank() == span.len() {
                representatives.push(z.clone());
            } else {
                span.pop();
            }
        }
        degrees.push(DegreeCohomology {
            degree: k,
            cycles: cycles.len(),
            boundaries: boundaries.len(),
            betti: cycles.len() - boundaries.len(),
            representatives,
        });
    }
    Ok(CohomologyReport { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn zero_operator_on_exterior_shape() {
        let d = Matrix::<BigRational>::zeros(8, 8);
        let grading = Grading::Integer(vec![0, 1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(cohomology(&d, &grading).unwrap().betti_numbers(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn rejects_non_differentials() {
        let d = Matrix::<BigRational>::identity(2);
        assert_eq!(
            cohomology(&d, &Grading::Parity(vec![0, 1])),
            Err(CohomologyError::NotADifferential)
        );
    }

    #[test]
    fn acyclic_pair() {
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::from_integer(0.into());
        let d = Matrix::new(2, 2, vec![zero.clone(), zero.clone(), one, zero]);
        let report = cohomology(&d, &Grading::Integer(vec![0, 1])).unwrap();
        assert!(report.is_acyclic());
        assert_eq!((report.total_cycles(), report.total_boundaries()), (1, 1));
    }
}
