//! Finite-dimensional weight modules of `U_q(sl2)` given by generator matrices.

use std::fmt;

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Field, Params, ScalarError};
use crate::uq::{adjoint_matrix, Generator, UqError, UqWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("module invariant violated: {0}")]
    InvalidModule(String),
    #[error("irreducible summands have total dimension {found}, module has dimension {expected}")]
    DecompositionIncomplete { found: usize, expected: usize },
    #[error("subspace is not a submodule")]
    NotASubmodule,
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A type 1 module: basis vectors of integer weight with matrices for `E, F, K, K^-1`.
///
/// Matrices act on column vectors; column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq)]
pub struct ModuleSpec<F> {
    labels: Vec<String>,
    weights: Vec<i64>,
    e: Matrix<F>,
    f: Matrix<F>,
    k: Matrix<F>,
    kinv: Matrix<F>,
}

impl<F: Field> ModuleSpec<F> {
    /// Builds the module; `K` and `K^-1` are determined by the weights.
    pub fn new(
        labels: Vec<String>,
        weights: Vec<i64>,
        e: Matrix<F>,
        f: Matrix<F>,
        params: &Params<F>,
    ) -> Self {
        let k = Matrix::diagonal(&weights.iter().map(|&w| params.q_pow(w)).collect::<Vec<_>>());
        let kinv = Matrix::diagonal(&weights.iter().map(|&w| params.q_pow(-w)).collect::<Vec<_>>());
        ModuleSpec {
            labels,
            weights,
            e,
            f,
            k,
            kinv,
        }
    }

    /// The quantised adjoint module on `(v2, v0, vm2) = (X, Z, Y)`.
    pub fn v2pi(params: &Params<F>) -> Result<Self, ReprError> {
        let module = ModuleSpec {
            labels: vec!["v2".into(), "v0".into(), "vm2".into()],
            weights: vec![2, 0, -2],
            e: adjoint_matrix(Generator::E, params)?,
            f: adjoint_matrix(Generator::F, params)?,
            k: adjoint_matrix(Generator::K, params)?,
            kinv: adjoint_matrix(Generator::KInv, params)?,
        };
        module.check(params)?;
        Ok(module)
    }

    pub fn trivial(params: &Params<F>) -> Self {
        Self::new(
            vec!["1".into()],
            vec![0],
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            params,
        )
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn action(&self, g: Generator) -> &Matrix<F> {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::K => &self.k,
            Generator::KInv => &self.kinv,
        }
    }

    /// Matrix of an arbitrary element of `U_q(sl2)`.
    pub fn action_of(&self, w: &UqWord<F>) -> Matrix<F> {
        let n = self.dim();
        w.terms().fold(Matrix::zeros(n, n), |acc, (m, c)| {
            let op = m
                .letters()
                .into_iter()
                .fold(Matrix::identity(n), |acc, g| acc.mul(self.action(g)));
            acc.add(&op.scale(c))
        })
    }

    /// Checks the weight and commutation identities.
    pub fn check(&self, params: &Params<F>) -> Result<(), ReprError> {
        let n = self.dim();
        let bad = |what: &str| Err(ReprError::InvalidModule(what.to_string()));
        if self.weights.len() != n || [&self.e, &self.f, &self.k, &self.kinv]
            .iter()
            .any(|m| m.rows() != n || m.cols() != n)
        {
            return bad("matrix shapes");
        }
        let expected_k = Matrix::diagonal(&self.weights.iter().map(|&w| params.q_pow(w)).collect::<Vec<_>>());
        if self.k != expected_k {
            return bad("K must be diagonal with entries q^weight");
        }
        if !self.k.mul(&self.kinv).is_identity() {
            return bad("K K^-1 = 1");
        }
        let q2 = params.q_pow(2);
        if self.k.mul(&self.e) != self.e.mul(&self.k).scale(&q2) {
            return bad("K E = q^2 E K");
        }
        if self.k.mul(&self.f) != self.f.mul(&self.k).scale(&params.q_pow(-2)) {
            return bad("K F = q^-2 F K");
        }
        let commutator = self.e.mul(&self.f).sub(&self.f.mul(&self.e));
        let denom = params.q_minus_q_inv().inv()?;
        if commutator != self.k.sub(&self.kinv).scale(&denom) {
            return bad("EF - FE = (K - K^-1)/(q - q^-1)");
        }
        Ok(())
    }

    /// `M ⊗ N` with the action through the coproduct; basis index `i * dim N + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (im, in_) = (Matrix::identity(self.dim()), Matrix::identity(other.dim()));
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut weights = Vec::with_capacity(labels.capacity());
        for (a, wa) in self.labels.iter().zip(&self.weights) {
            for (b, wb) in other.labels.iter().zip(&other.weights) {
                labels.push(format!("{}⊗{}", a, b));
                weights.push(wa + wb);
            }
        }
        ModuleSpec {
            labels,
            weights,
            e: self.e.kron(&other.k).add(&im.kron(&other.e)),
            f: self.f.kron(&in_).add(&self.kinv.kron(&other.f)),
            k: self.k.kron(&other.k),
            kinv: self.kinv.kron(&other.kinv),
        }
    }

    /// Isotypic decomposition by highest-weight vectors.
    pub fn decompose(&self) -> Result<Decomposition<F>, ReprError> {
        let mut top_down: Vec<i64> = self.weights.iter().copied().filter(|&w| w >= 0).collect();
        top_down.sort_unstable_by(|a, b| b.cmp(a));
        top_down.dedup();
        let mut summands = Vec::new();
        for w in top_down {
            let cols: Vec<usize> = (0..self.dim()).filter(|&i| self.weights[i] == w).collect();
            let rows: Vec<usize> = (0..self.dim()).collect();
            let restricted = self.e.select(&rows, &cols);
            for kernel_vector in restricted.kernel() {
                let mut v = vec![F::zero(); self.dim()];
                for (c, x) in cols.iter().zip(kernel_vector) {
                    v[*c] = x;
                }
                let mut basis = vec![v.clone()];
                for _ in 0..w {
                    let next = self.f.apply(basis.last().expect("nonempty"));
                    basis.push(next);
                }
                summands.push(Summand {
                    highest_weight: w,
                    highest_weight_vector: v,
                    basis,
                });
            }
        }
        let found: usize = summands.iter().map(|s| s.basis.len()).sum();
        let decomposition = Decomposition { summands };
        if found != self.dim() || decomposition.change_of_basis(self.dim()).rank() != self.dim() {
            return Err(ReprError::DecompositionIncomplete {
                found,
                expected: self.dim(),
            });
        }
        Ok(decomposition)
    }

    /// Basis of the invariant vectors.
    pub fn invariants(&self) -> Vec<Vec<F>> {
        let n = self.dim();
        let k_minus_one = self.k.sub(&Matrix::identity(n));
        let stacked = Matrix::from_fn(3 * n, n, |i, j| match i / n {
            0 => self.e.get(i, j).clone(),
            1 => self.f.get(i - n, j).clone(),
            _ => k_minus_one.get(i - 2 * n, j).clone(),
        });
        stacked.kernel()
    }

    /// Restriction to the submodule with the given basis (vectors of weight `weights[i]`).
    pub fn restrict(
        &self,
        basis: &[Vec<F>],
        labels: Vec<String>,
        weights: Vec<i64>,
    ) -> Result<Self, ReprError> {
        let b = Matrix::from_columns(self.dim(), basis);
        let image = |m: &Matrix<F>| {
            b.solve_matrix(&m.mul(&b))
                .map_err(|_| ReprError::NotASubmodule)
        };
        Ok(ModuleSpec {
            labels,
            weights,
            e: image(&self.e)?,
            f: image(&self.f)?,
            k: image(&self.k)?,
            kinv: image(&self.kinv)?,
        })
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E> + Copy) -> Result<ModuleSpec<G>, E> {
        Ok(ModuleSpec {
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            e: self.e.try_map(f)?,
            f: self.f.try_map(f)?,
            k: self.k.try_map(f)?,
            kinv: self.kinv.try_map(f)?,
        })
    }
}

impl<F: Field> fmt::Debug for ModuleSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleSpec")
            .field("labels", &self.labels)
            .field("weights", &self.weights)
            .finish()
    }
}

/// One irreducible summand: a highest-weight vector and its `F`-string.
#[derive(Debug, Clone, PartialEq)]
pub struct Summand<F> {
    pub highest_weight: i64,
    pub highest_weight_vector: Vec<F>,
    pub basis: Vec<Vec<F>>,
}

impl<F> Summand<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<F> {
    pub summands: Vec<Summand<F>>,
}

impl<F: Field> Decomposition<F> {
    /// Matrix whose columns are the summand bases, in order.
    pub fn change_of_basis(&self, dim: usize) -> Matrix<F> {
        let columns: Vec<Vec<F>> = self
            .summands
            .iter()
            .flat_map(|s| s.basis.iter().cloned())
            .collect();
        Matrix::from_columns(dim, &columns)
    }

    pub fn highest_weights(&self) -> Vec<i64> {
        self.summands.iter().map(|s| s.highest_weight).collect()
    }

    /// Each summand as a module in its own right.
    pub fn modules(&self, parent: &ModuleSpec<F>) -> Result<Vec<ModuleSpec<F>>, ReprError> {
        self.summands
            .iter()
            .map(|s| {
                let n = s.highest_weight;
                let weights: Vec<i64> = (0..=n).map(|i| n - 2 * i).collect();
                let labels = (0..=n as usize).map(|i| format!("F^{}h", i)).collect();
                parent.restrict(&s.basis, labels, weights)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn p() -> Params<Scalar> {
        Params::symbolic()
    }

    #[test]
    fn v2pi_module() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        assert_eq!(v.weights(), &[2, 0, -2]);
        assert!(v.action(Generator::E).pow(3).is_zero());
        assert_eq!(v.action(Generator::E).kernel(), vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]]);
        assert!(v.invariants().is_empty());
        assert_eq!(v.decompose().unwrap().highest_weights(), vec![2]);
    }

    #[test]
    fn tensor_square() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let vv = v.tensor(&v);
        assert_eq!(vv.weights(), &[4, 2, 0, 2, 0, -2, 0, -2, -4]);
        vv.check(&p).unwrap();
        let d = vv.decompose().unwrap();
        assert_eq!(d.highest_weights(), vec![4, 2, 0]);
        assert_eq!(d.summands.iter().map(Summand::dim).collect::<Vec<_>>(), vec![5, 3, 1]);
        // E(v0 ⊗ v2) = q^2 (E v0) ⊗ v2
        let e_col = vv.action(Generator::E).column(3);
        let ev0 = v.action(Generator::E).column(1);
        let mut expected = vec![Scalar::zero(); 9];
        for i in 0..3 {
            expected[i * 3] = ev0[i].mul(p.q()).mul(p.q());
        }
        assert_eq!(e_col, expected);
    }

    #[test]
    fn trivial_module() {
        let p = p();
        let t = ModuleSpec::trivial(&p);
        t.check(&p).unwrap();
        assert_eq!(t.decompose().unwrap().highest_weights(), vec![0]);
        assert_eq!(t.invariants().len(), 1);
    }

    #[test]
    fn decomposition_round_trip() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let vv = v.tensor(&v);
        let d = vv.decompose().unwrap();
        let b = d.change_of_basis(9);
        let binv = b.inverse().unwrap();
        let parts = d.modules(&vv).unwrap();
        for g in Generator::ALL {
            let mut block = Matrix::zeros(9, 9);
            let mut offset = 0;
            for part in &parts {
                let m = part.action(g);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        block.set(offset + i, offset + j, m.get(i, j).clone());
                    }
                }
                offset += m.rows();
            }
            assert_eq!(b.mul(&block).mul(&binv), *vv.action(g));
        }
    }
}
