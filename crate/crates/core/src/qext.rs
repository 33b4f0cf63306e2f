//! The quantum exterior algebra `∧_q V_2π`.

use crate::algebra::{
    degree, letter_index, parity, AlgebraError, Algebra, Element, ExtElement, Exterior, BASIS, DIM,
    TOP,
};
use crate::braiding::sigma_tilde;
use crate::cohomology::{cohomology, CohomologyError, CohomologyReport, Grading};
use crate::differential::DifferentialSpace;
use crate::linalg::{LinalgError, Matrix};
use crate::scalar::Field;

pub type ExtAlgebra<F> = Algebra<F, Exterior>;

/// Degree-two structure constants read off the quotient `V ⊗ V / im(1 + σ̃)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientTable<F> {
    pub quotient_dim: usize,
    /// `cosets[3a + b]` are the coordinates of `v_a ⊗ v_b` on `v2v0, v2vm2, v0vm2`.
    pub cosets: Vec<Vec<F>>,
}

/// Coefficients `(a, b, e)` with `d = a vm2 L_X + b v0 L_Z + e v2 L_Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorForm<F> {
    pub solved: [F; 3],
    pub displayed: [F; 3],
}

impl<F: Field> OperatorForm<F> {
    pub fn agreement(&self) -> [bool; 3] {
        [0, 1, 2].map(|i| self.solved[i] == self.displayed[i])
    }
}

/// Index of the degree-two monomial `v_a v_b` for `a < b`.
fn pair_monomial(a: u8, b: u8) -> usize {
    BASIS.iter().position(|w| *w == [a, b]).expect("ordered pair")
}

impl<F: Field> Algebra<F, Exterior> {
    /// Rebuilds the degree-two table from the normalised braiding and compares.
    pub fn ext_from_braiding(&self) -> Result<QuotientTable<F>, AlgebraError> {
        let v = self.generators_module();
        let st = sigma_tilde(v, v, self.params())?;
        let ideal = Matrix::identity(9).add(&st.matrix).image_basis();
        let coset_basis = [1usize, 2, 5];
        let mut columns: Vec<Vec<F>> = coset_basis
            .iter()
            .map(|&i| {
                let mut e = vec![F::zero(); 9];
                e[i] = F::one();
                e
            })
            .collect();
        columns.extend(ideal.iter().cloned());
        let system = Matrix::from_columns(9, &columns);
        let quotient_dim = 9 - ideal.len();
        let mut cosets = Vec::with_capacity(9);
        for a in 0..3u8 {
            for b in 0..3u8 {
                let mut e = vec![F::zero(); 9];
                e[3 * a as usize + b as usize] = F::one();
                let x = system.solve(&e)?;
                let coords = x[..3].to_vec();
                let product = self.mul(&Element::generator(a), &Element::generator(b));
                let expected: Vec<F> = [(0, 1), (0, 2), (1, 2)]
                    .iter()
                    .map(|&(s, t)| product.coeff(pair_monomial(s, t)).clone())
                    .collect();
                if coords != expected {
                    return Err(AlgebraError::TableMismatch(format!(
                        "{}*{}",
                        crate::algebra::LABELS[letter_index(a)],
                        crate::algebra::LABELS[letter_index(b)]
                    )));
                }
                cosets.push(coords);
            }
        }
        Ok(QuotientTable {
            quotient_dim,
            cosets,
        })
    }

    /// `d v` on a generator.
    fn d_generator(&self, letter: u8) -> ExtElement<F> {
        let p = self.params();
        let c_inv = p.c().inv().expect("c is nonzero");
        match letter {
            0 => Element::basis(pair_monomial(0, 1)).scale(&c_inv.neg()),
            1 => Element::basis(pair_monomial(0, 2))
                .scale(&p.q_pow(2).add(&F::one()).mul(&p.q_pow(-1)).mul(&c_inv)),
            _ => Element::basis(pair_monomial(1, 2)).scale(&c_inv.neg()),
        }
    }

    /// `d_∧` from its values on generators and the graded Leibniz rule.
    pub fn d_ext_matrix(&self) -> Matrix<F> {
        let mut images: Vec<ExtElement<F>> = Vec::with_capacity(DIM);
        for word in BASIS {
            let image = match word.split_first() {
                None => Element::zero(),
                Some((&first, rest)) => {
                    let rest_index = BASIS.iter().position(|w| *w == rest).expect("ordered");
                    let m = Element::basis(rest_index);
                    let dm = images[rest_index].clone();
                    self.mul(&self.d_generator(first), &m)
                        .sub(&self.mul(&Element::generator(first), &dm))
                }
            };
            images.push(image);
        }
        let cols: Vec<Vec<F>> = images.into_iter().map(|e| e.coeffs().to_vec()).collect();
        Matrix::from_columns(DIM, &cols)
    }

    pub fn d_ext(&self, a: &ExtElement<F>) -> ExtElement<F> {
        self.apply(&self.d_ext_matrix(), a)
    }

    /// Solves for `(a, b, e)` in `d = a vm2 L_X + b v0 L_Z + e v2 L_Y`.
    pub fn d_ext_operator_form(&self) -> Result<OperatorForm<F>, AlgebraError> {
        let d = self.d_ext_matrix();
        let terms: Vec<Matrix<F>> = [(2u8, 0u8), (1, 1), (0, 2)]
            .iter()
            .map(|&(factor, x)| {
                self.left_mul_matrix(&Element::generator(factor))
                    .mul(&self.lie_derivative_of_letter(x))
            })
            .collect();
        let columns: Vec<Vec<F>> = terms.iter().map(|m| m.entries().to_vec()).collect();
        let system = Matrix::from_columns(DIM * DIM, &columns);
        let x = system.solve(d.entries())?;
        let rebuilt = terms
            .iter()
            .zip(&x)
            .fold(Matrix::zeros(DIM, DIM), |acc, (m, k)| acc.add(&m.scale(k)));
        if rebuilt != d {
            return Err(LinalgError::NoSolution.into());
        }
        let p = self.params();
        let c = p.c();
        let one = F::one();
        let q2 = p.q_pow(2);
        let prefactor = q2.div(&one.add(&p.q_pow(4)))?;
        let displayed = [
            prefactor.div(c)?,
            prefactor.mul(&p.q_pow(3)).div(&one.add(&q2).mul(c))?,
            prefactor.mul(&q2).div(&q2)?,
        ];
        Ok(OperatorForm {
            solved: [x[0].clone(), x[1].clone(), x[2].clone()],
            displayed,
        })
    }

    /// Matrix of the contraction `ι_x` for a generator `x`, from the fixed table.
    pub fn contraction_matrix(&self, letter: u8) -> Matrix<F> {
        let p = self.params();
        let c = p.c().clone();
        let one = F::one();
        let q = |k| p.q_pow(k);
        let q2_plus_1 = q(2).add(&one);
        let mut m = Matrix::zeros(DIM, DIM);
        let mut put = |from: &[u8], to: &[u8], value: F| {
            let i = BASIS.iter().position(|w| *w == from).expect("basis");
            let j = BASIS.iter().position(|w| *w == to).expect("basis");
            m.set(j, i, value);
        };
        match letter {
            0 => {
                put(&[2], &[], c.clone());
                put(&[0, 2], &[0], c.neg());
                put(&[1, 2], &[1], c.neg());
                put(&[0, 1, 2], &[0, 1], c.clone());
            }
            1 => {
                put(&[1], &[], q(-3).mul(&q2_plus_1).mul(&c));
                put(&[0, 1], &[0], q2_plus_1.mul(&q(-3)).mul(&c).neg());
                put(&[0, 2], &[1], one.sub(&q(2)).mul(&q(-2)).mul(&c));
                put(&[1, 2], &[2], q2_plus_1.mul(&q(-1)).mul(&c));
                put(&[0, 1, 2], &[0, 2], q2_plus_1.mul(&q(-1)).mul(&c).neg());
            }
            _ => {
                put(&[0], &[], q(-2).mul(&c));
                put(&[0, 1], &[1], c.clone());
                put(&[0, 2], &[2], q(-2).mul(&c));
                put(&[0, 1, 2], &[1, 2], c.clone());
            }
        }
        m
    }

    /// `ι_x` for a basis monomial `x = x1 x2 ...`, as `ι_x1 ∘ ι_x2 ∘ ...`.
    pub fn monomial_contraction_matrix(&self, x: usize) -> Matrix<F> {
        BASIS[x]
            .iter()
            .fold(Matrix::identity(DIM), |acc, &l| acc.mul(&self.contraction_matrix(l)))
    }

    pub fn contract(&self, x: usize, a: &ExtElement<F>) -> ExtElement<F> {
        self.apply(&self.monomial_contraction_matrix(x), a)
    }

    /// `ι_top(top)`, the scalar pairing of the top monomial with itself.
    pub fn top_pairing(&self) -> F {
        self.contract(TOP, &Element::basis(TOP)).coeff(0).clone()
    }

    /// Cohomology of `d_∧` graded by degree.
    pub fn cohomology(&self) -> Result<CohomologyReport<F>, CohomologyError> {
        cohomology(&self.d_ext_matrix(), &Grading::Integer((0..DIM).map(degree).collect()))
    }

    /// `a b - (-1)^{p(a)p(b)} m σ̃(a ⊗ b)` on generators; zero for a σ̃-supercommutative algebra.
    pub fn supercommutativity_defect(&self, a: u8, b: u8) -> Result<ExtElement<F>, AlgebraError> {
        let v = self.generators_module();
        let st = sigma_tilde(v, v, self.params())?;
        let image = st.image_of(a as usize, b as usize);
        let braided = image.iter().enumerate().fold(Element::zero(), |acc, (idx, k)| {
            let prod = self.mul(
                &Element::generator((idx / 3) as u8),
                &Element::generator((idx % 3) as u8),
            );
            acc.add(&prod.scale(k))
        });
        let sign_is_odd = parity(letter_index(a)) * parity(letter_index(b)) == 1;
        let direct = self.mul(&Element::generator(a), &Element::generator(b));
        Ok(if sign_is_odd { direct.add(&braided) } else { direct.sub(&braided) })
    }
}

impl<F: Field> DifferentialSpace<F> for Algebra<F, Exterior> {
    fn dim(&self) -> usize {
        DIM
    }

    fn lie_derivative(&self, letter: u8) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.lie_derivative_of_letter(letter))
    }

    fn contraction(&self, letter: u8) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.contraction_matrix(letter))
    }

    fn differential(&self) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.d_ext_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Params, Scalar};
    use crate::uq::Generator;

    fn ext() -> ExtAlgebra<Scalar> {
        ExtAlgebra::new(Params::symbolic()).unwrap()
    }

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn e(text: &str) -> ExtElement<Scalar> {
        let a = ext();
        a.eval(&crate::expr::parse(text).unwrap(), None).unwrap()
    }

    #[test]
    fn relations() {
        assert_eq!(e("v0*v2"), e("-q^-2*v2*v0"));
        assert_eq!(e("v0*v0"), e("(1-q^4)/q^3*v2*vm2"));
        assert_eq!(e("vm2*v0"), e("-q^-2*v0*vm2"));
        assert_eq!(e("vm2*v2"), e("-v2*vm2"));
        assert!(e("v2*v2").is_zero() && e("vm2*vm2").is_zero());
        assert!(e("v0*(v2*v0)").is_zero());
    }

    #[test]
    fn table_from_braiding() {
        let t = ext().ext_from_braiding().unwrap();
        assert_eq!(t.quotient_dim, 3);
        assert_eq!(t.cosets[3], vec![s("-q^-2"), Scalar::zero(), Scalar::zero()]);
        assert_eq!(t.cosets[4], vec![Scalar::zero(), s("(1-q^4)/q^3"), Scalar::zero()]);
    }

    #[test]
    fn differential() {
        let a = ext();
        assert_eq!(a.d_ext(&e("v0")), e("(1+q^2)/(q*c)*v2*vm2"));
        assert!(a.d_ext(&e("v2*v0*vm2")).is_zero());
        assert!(a.differential_squares_to_zero().unwrap());
        for g in [Generator::E, Generator::F, Generator::K] {
            let act = a.action_matrix(g);
            assert_eq!(act.mul(&a.d_ext_matrix()), a.d_ext_matrix().mul(act));
        }
    }

    #[test]
    fn operator_form() {
        let form = ext().d_ext_operator_form().unwrap();
        assert_eq!(form.solved[0], s("q^2/((1+q^4)*c)"));
        assert_eq!(form.solved[1], s("q^5/((1+q^2)*(1+q^4)*c)"));
        assert_eq!(form.solved[2], s("q^4/((1+q^4)*c)"));
        assert_eq!(form.agreement(), [true, true, false]);
    }

    #[test]
    fn contractions() {
        let a = ext();
        assert_eq!(a.contract(2, &e("v2*v0")), e("-(1+q^2)/q^3*c*v2"));
        assert_eq!(a.contract(1, &e("v2*v0*vm2")), e("c*v2*v0"));
        assert_eq!(a.top_pairing(), s("c^3*(1+q^2)/q"));
        assert!(a.satisfies_cartan().unwrap());
        assert_eq!(a.apply(&a.lie_derivative_of_letter(0), &e("vm2")), e("v0"));
    }

    #[test]
    fn cohomology_is_spanned_by_invariants() {
        let report = ext().cohomology().unwrap();
        assert_eq!(report.betti_numbers(), vec![1, 0, 0, 1]);
        let reps: Vec<_> = report.degrees.iter().flat_map(|d| d.representatives.clone()).collect();
        assert_eq!(reps, vec![e("1").coeffs().to_vec(), e("v2*v0*vm2").coeffs().to_vec()]);
    }

    #[test]
    fn supercommutative_on_generators() {
        let a = ext();
        for x in 0..3 {
            for y in 0..3 {
                assert!(a.supercommutativity_defect(x, y).unwrap().is_zero());
            }
        }
    }
}
