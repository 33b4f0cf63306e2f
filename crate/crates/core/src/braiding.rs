//! The R-matrix braiding `σ`, its inverse, and the normalised braiding `σ̃`.

use thiserror::Error;

use crate::linalg::{proportionality, LinalgError, Matrix};
use crate::repn::{ModuleSpec, ReprError};
use crate::scalar::{Field, Params, ScalarError};
use crate::uq::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error("{0} R-matrix conventions reproduce the anchor values, expected exactly one")]
    ConventionMismatch(usize),
    #[error("σ² does not act by a scalar on the summand of highest weight {highest_weight}")]
    NonScalarSquare { highest_weight: i64 },
    #[error("σ² acts by {0}, which is not a power of q^(1/2) with a square root in the field")]
    NonMonomialScalar(String),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Whether the Cartan factor is applied before or after the nilpotent part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorOrder {
    CartanFirst,
    ThetaFirst,
}

/// One of the textbook variants of the universal R-matrix.
///
/// `R = κ Θ` with `κ(m ⊗ n) = q^(s·wt(m)wt(n)/2) m ⊗ n` and
/// `Θ = Σ_k q^(t·k(k-1)/2) (q - q^-1)^k / [k]! X^k ⊗ Y^k`, where `(X, Y)` is
/// `(E, F)` or `(F, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convention {
    pub cartan_sign: i64,
    pub theta_sign: i64,
    pub order: FactorOrder,
    pub raising_first: bool,
}

/// The variant singled out by [`select_convention`].
pub const PINNED: Convention = Convention {
    cartan_sign: 1,
    theta_sign: 1,
    order: FactorOrder::ThetaFirst,
    raising_first: true,
};

impl Convention {
    pub fn all() -> Vec<Convention> {
        let mut out = Vec::new();
        for cartan_sign in [1, -1] {
            for theta_sign in [1, -1] {
                for order in [FactorOrder::CartanFirst, FactorOrder::ThetaFirst] {
                    for raising_first in [true, false] {
                        out.push(Convention {
                            cartan_sign,
                            theta_sign,
                            order,
                            raising_first,
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidingKind {
    Sigma,
    SigmaInverse,
    SigmaTilde,
}

/// A linear map `M ⊗ N -> N ⊗ M` in product bases.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidingOp<F: Field> {
    pub kind: BraidingKind,
    pub left_dim: usize,
    pub right_dim: usize,
    pub matrix: Matrix<F>,
}

impl<F: Field> BraidingOp<F> {
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.apply(v)
    }

    /// Image of the basis tensor `m_i ⊗ n_j`.
    pub fn image_of(&self, i: usize, j: usize) -> Vec<F> {
        self.matrix.column(i * self.right_dim + j)
    }

    /// `(action on N ⊗ M) · op = op · (action on M ⊗ N)` for every generator.
    pub fn is_equivariant(&self, m: &ModuleSpec<F>, n: &ModuleSpec<F>) -> bool {
        let (mn, nm) = (m.tensor(n), n.tensor(m));
        Generator::ALL
            .iter()
            .all(|&g| nm.action(g).mul(&self.matrix) == self.matrix.mul(mn.action(g)))
    }
}

/// The flip `m ⊗ n -> n ⊗ m`.
pub fn flip<F: Field>(m: usize, n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, F::one());
        }
    }
    out
}

fn r_matrix<F: Field>(
    conv: Convention,
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<Matrix<F>, ScalarError> {
    let mut cartan = Vec::with_capacity(m.dim() * n.dim());
    for wa in m.weights() {
        for wb in n.weights() {
            cartan.push(params.q_pow_half(conv.cartan_sign * wa * wb)?);
        }
    }
    let kappa = Matrix::diagonal(&cartan);
    let (x, y) = if conv.raising_first {
        (m.action(Generator::E), n.action(Generator::F))
    } else {
        (m.action(Generator::F), n.action(Generator::E))
    };
    let size = m.dim() * n.dim();
    let mut theta = Matrix::identity(size);
    let (mut xk, mut yk) = (Matrix::identity(m.dim()), Matrix::identity(n.dim()));
    let mut k = 1i64;
    loop {
        xk = xk.mul(x);
        yk = yk.mul(y);
        if xk.is_zero() || yk.is_zero() {
            break;
        }
        let coeff = params
            .q_pow_half(conv.theta_sign * k * (k - 1))?
            .mul(&params.q_minus_q_inv().pow(k)?)
            .div(&params.q_factorial(k as u32))?;
        theta = theta.add(&xk.kron(&yk).scale(&coeff));
        k += 1;
    }
    Ok(match conv.order {
        FactorOrder::CartanFirst => theta.mul(&kappa),
        FactorOrder::ThetaFirst => kappa.mul(&theta),
    })
}

pub fn sigma_with<F: Field>(
    conv: Convention,
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<BraidingOp<F>, BraidingError> {
    let r = r_matrix(conv, m, n, params)?;
    Ok(BraidingOp {
        kind: BraidingKind::Sigma,
        left_dim: m.dim(),
        right_dim: n.dim(),
        matrix: flip(m.dim(), n.dim()).mul(&r),
    })
}

/// `σ = flip ∘ R` in the pinned convention.
pub fn sigma<F: Field>(
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<BraidingOp<F>, BraidingError> {
    sigma_with(PINNED, m, n, params)
}

/// `σ^-1 : M ⊗ N -> N ⊗ M`, the inverse of `σ_{N,M}`.
pub fn sigma_inv<F: Field>(
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<BraidingOp<F>, BraidingError> {
    let forward = sigma(n, m, params)?;
    Ok(BraidingOp {
        kind: BraidingKind::SigmaInverse,
        left_dim: m.dim(),
        right_dim: n.dim(),
        matrix: forward.matrix.inverse()?,
    })
}

/// Indices of `(v2, v0)` and `(v0, v2)` in `V ⊗ V`.
const V2_V0: usize = 1;
const V0_V2: usize = 3;

/// Enumerates the conventions and returns the unique equivariant one that
/// reproduces `σ(v0⊗v2) = v2⊗v0 + q^-2(q^4-1) v0⊗v2` and `σ^-1(v0⊗v2) = v2⊗v0`.
pub fn select_convention<F: Field>(params: &Params<F>) -> Result<Convention, BraidingError> {
    let v = ModuleSpec::v2pi(params)?;
    let mut expected_sigma = vec![F::zero(); 9];
    expected_sigma[V2_V0] = F::one();
    expected_sigma[V0_V2] = params.q_pow(2).sub(&params.q_pow(-2));
    let mut expected_inverse = vec![F::zero(); 9];
    expected_inverse[V2_V0] = F::one();
    let mut matches = Vec::new();
    for conv in Convention::all() {
        let s = sigma_with(conv, &v, &v, params)?;
        if !s.is_equivariant(&v, &v) || s.matrix.column(V0_V2) != expected_sigma {
            continue;
        }
        let Ok(inverse) = s.matrix.inverse() else {
            continue;
        };
        if inverse.column(V0_V2) == expected_inverse {
            matches.push(conv);
        }
    }
    match matches.as_slice() {
        [conv] => Ok(*conv),
        _ => Err(BraidingError::ConventionMismatch(matches.len())),
    }
}

/// Drinfeld's normalised braiding `σ ∘ (σ_{N,M} σ_{M,N})^(-1/2)`.
///
/// The square root is taken summand by summand on `M_i ⊗ N_j`, where the
/// double braiding acts by a power of `q^(1/2)`, choosing the root that
/// tends to 1 at `q = 1`.
pub fn sigma_tilde<F: Field>(
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<BraidingOp<F>, BraidingError> {
    let (dm, dn) = (m.dim(), n.dim());
    let (m_dec, n_dec) = (m.decompose()?, n.decompose()?);
    let (m_parts, n_parts) = (m_dec.modules(m)?, n_dec.modules(n)?);
    let mut rescale = Matrix::zeros(dm * dn, dm * dn);
    let mut off_i = 0;
    for mi in &m_parts {
        let mut off_j = 0;
        for nj in &n_parts {
            let block = block_rescale(mi, nj, params)?;
            let dnj = nj.dim();
            for s in 0..mi.dim() {
                for t in 0..dnj {
                    for s2 in 0..mi.dim() {
                        for t2 in 0..dnj {
                            let x = block.get(s * dnj + t, s2 * dnj + t2);
                            if !x.is_zero() {
                                rescale.set(
                                    (off_i + s) * dn + off_j + t,
                                    (off_i + s2) * dn + off_j + t2,
                                    x.clone(),
                                );
                            }
                        }
                    }
                }
            }
            off_j += dnj;
        }
        off_i += mi.dim();
    }
    let (bm, bn) = (m_dec.change_of_basis(dm), n_dec.change_of_basis(dn));
    let basis = bm.kron(&bn);
    let basis_inv = bm.inverse()?.kron(&bn.inverse()?);
    let full = basis.mul(&rescale).mul(&basis_inv);
    let s = sigma(m, n, params)?;
    Ok(BraidingOp {
        kind: BraidingKind::SigmaTilde,
        left_dim: dm,
        right_dim: dn,
        matrix: s.matrix.mul(&full),
    })
}

/// `(σ_{N,M} σ_{M,N})^(-1/2)` on `M ⊗ N` for irreducible `M`, `N`.
fn block_rescale<F: Field>(
    m: &ModuleSpec<F>,
    n: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<Matrix<F>, BraidingError> {
    let t = sigma(n, m, params)?.matrix.mul(&sigma(m, n, params)?.matrix);
    let mn = m.tensor(n);
    let dec = mn.decompose()?;
    let mut diagonal = Vec::with_capacity(mn.dim());
    for summand in &dec.summands {
        let non_scalar = BraidingError::NonScalarSquare {
            highest_weight: summand.highest_weight,
        };
        let v = &summand.highest_weight_vector;
        let lambda = proportionality(&t.apply(v), v).ok_or(non_scalar.clone())?;
        if summand
            .basis
            .iter()
            .any(|b| proportionality(&t.apply(b), b).as_ref() != Some(&lambda))
        {
            return Err(non_scalar);
        }
        let k = lambda
            .q_half_exponent(params)
            .filter(|k| k % 2 == 0)
            .ok_or_else(|| BraidingError::NonMonomialScalar(lambda.to_string()))?;
        let factor = params.q_pow_half(-k / 2)?;
        diagonal.extend(std::iter::repeat_n(factor, summand.dim()));
    }
    let q = dec.change_of_basis(mn.dim());
    Ok(q.mul(&Matrix::diagonal(&diagonal)).mul(&q.inverse()?))
}

/// Basis of the image of `1 + σ̃` on `M ⊗ M`.
pub fn wedge_relation_ideal<F: Field>(
    m: &ModuleSpec<F>,
    params: &Params<F>,
) -> Result<Vec<Vec<F>>, BraidingError> {
    let st = sigma_tilde(m, m, params)?;
    Ok(Matrix::identity(m.dim() * m.dim())
        .add(&st.matrix)
        .image_basis())
}

/// Braid relation `σ1 σ2 σ1 = σ2 σ1 σ2` on `M ⊗ M ⊗ M`.
pub fn yang_baxter_holds<F: Field>(m: &ModuleSpec<F>, params: &Params<F>) -> Result<bool, BraidingError> {
    let s = sigma(m, m, params)?.matrix;
    let id = Matrix::identity(m.dim());
    let s1 = s.kron(&id);
    let s2 = id.kron(&s);
    Ok(s1.mul(&s2).mul(&s1) == s2.mul(&s1).mul(&s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn p() -> Params<Scalar> {
        Params::symbolic()
    }

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn vec9(entries: &[(usize, &str)]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 9];
        for (i, t) in entries {
            v[*i] = s(t);
        }
        v
    }

    #[test]
    fn pinned_convention_is_the_unique_match() {
        assert_eq!(select_convention(&p()).unwrap(), PINNED);
    }

    #[test]
    fn anchor_values() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let sg = sigma(&v, &v, &p).unwrap();
        assert_eq!(sg.image_of(1, 0), vec9(&[(1, "1"), (3, "q^-2*(q^4-1)")]));
        let si = sigma_inv(&v, &v, &p).unwrap();
        assert_eq!(si.image_of(1, 0), vec9(&[(1, "1")]));
        assert!(si.matrix.mul(&sigma(&v, &v, &p).unwrap().matrix).is_identity());
        let st = sigma_tilde(&v, &v, &p).unwrap();
        assert_eq!(
            st.image_of(1, 0),
            vec9(&[(1, "2*q^2/(1+q^4)"), (3, "(q^4-1)/(1+q^4)")])
        );
        // v2 ⊗ v2 spans a weight space of dimension one
        let top = sg.image_of(0, 0);
        assert!(top[0].q_half_exponent(&p).is_some());
        assert!(top.iter().skip(1).all(|x| x.is_zero()));
    }

    #[test]
    fn normalised_braiding_is_involutive_and_equivariant() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let st = sigma_tilde(&v, &v, &p).unwrap();
        assert!(st.matrix.mul(&st.matrix).is_identity());
        assert!(st.is_equivariant(&v, &v));
        assert!(sigma(&v, &v, &p).unwrap().is_equivariant(&v, &v));
        assert!(sigma_inv(&v, &v, &p).unwrap().is_equivariant(&v, &v));
    }

    #[test]
    fn eigenvalues_on_summands() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let vv = v.tensor(&v);
        let st = sigma_tilde(&v, &v, &p).unwrap();
        let signs: Vec<i64> = vv
            .decompose()
            .unwrap()
            .summands
            .iter()
            .map(|sm| {
                let k = proportionality(&st.apply(&sm.highest_weight_vector), &sm.highest_weight_vector).unwrap();
                if k.is_one() { 1 } else if k.neg().is_one() { -1 } else { 0 }
            })
            .collect();
        assert_eq!(signs, vec![1, -1, 1]);
    }

    #[test]
    fn invariant_vectors_are_flipped() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let t = ModuleSpec::trivial(&p);
        let st = sigma_tilde(&t, &v, &p).unwrap();
        assert_eq!(st.matrix, flip(1, 3));
    }

    #[test]
    fn wedge_ideal() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        let ideal = wedge_relation_ideal(&v, &p).unwrap();
        assert_eq!(ideal.len(), 6);
        let st = sigma_tilde(&v, &v, &p).unwrap();
        let plus = Matrix::identity(9).add(&st.matrix);
        assert_eq!(plus.column(0), vec9(&[(0, "2")]));
        let col = plus.column(V0_V2);
        assert!(proportionality(&col, &vec9(&[(V0_V2, "1"), (V2_V0, "q^-2")])).is_some());
    }

    #[test]
    fn yang_baxter() {
        let p = p();
        let v = ModuleSpec::v2pi(&p).unwrap();
        assert!(yang_baxter_holds(&v, &p).unwrap());
    }
}
