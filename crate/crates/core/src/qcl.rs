//! The q-deformed Clifford algebra `Cl_q(sl2)` and its Cartan calculus.
//!
//! The Lie derivative has three independent constructions: the recursive
//! coproduct action, conjugation through the moment map `α_q`, and the braided
//! commutator with the moment element `μ(x) = ½ d x`. [`ClAlgebra::lie_derivative`] computes all three and
//! refuses to answer if they disagree.

use thiserror::Error;

use crate::algebra::{
    degree, letter_index, parity, AlgebraError, Algebra, ClElement, Clifford, Element, ExtElement,
    DIM,
};
use crate::braiding::{sigma, sigma_inv, sigma_tilde, BraidingError, BraidingKind, BraidingOp};
use crate::cohomology::{cohomology, CohomologyError, CohomologyReport, Grading};
use crate::differential::DifferentialSpace;
use crate::linalg::{proportionality, LinalgError, Matrix};
use crate::qext::ExtAlgebra;
use crate::repn::ModuleSpec;
use crate::scalar::{Field, Params, ScalarError};
use crate::uq::{slq_basis, Generator, Monomial, SlqElement, UqWord};

pub type ClAlgebra<F> = Algebra<F, Clifford>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QclError {
    #[error("the {route} route disagrees with the module action for {element}")]
    RouteDisagreement { element: String, route: &'static str },
    #[error("multiplication map has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("element has filtration degree {degree}, above the requested {requested}")]
    DegreeExceeded { degree: usize, requested: usize },
    #[error("{0} is not a scalar multiple of the expected element")]
    NotProportional(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<BraidingError> for QclError {
    fn from(e: BraidingError) -> Self {
        QclError::Algebra(e.into())
    }
}

impl From<LinalgError> for QclError {
    fn from(e: LinalgError) -> Self {
        QclError::Algebra(e.into())
    }
}

impl From<ScalarError> for QclError {
    fn from(e: ScalarError) -> Self {
        QclError::Algebra(e.into())
    }
}

/// The invariant form on `V_2π` deformed into the Clifford relations.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> BilinearForm<F> {
    pub fn new(params: &Params<F>) -> Self {
        let c = params.c();
        let mut m = Matrix::zeros(3, 3);
        m.set(0, 2, c.clone());
        m.set(1, 1, params.q_pow(-3).mul(&params.q_pow(2).add(&F::one())).mul(c));
        m.set(2, 0, params.q_pow(-2).mul(c));
        BilinearForm { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn pair(&self, a: u8, b: u8) -> &F {
        self.matrix.get(a as usize, b as usize)
    }

    /// The form as a map `V ⊗ V -> k`, a row of length 9.
    pub fn as_row(&self) -> Matrix<F> {
        Matrix::from_fn(1, 9, |_, j| self.matrix.get(j / 3, j % 3).clone())
    }

    pub fn evaluate(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for a in 0..3 {
            for b in 0..3 {
                acc = acc.add(&x[a].mul(self.matrix.get(a, b)).mul(&y[b]));
            }
        }
        acc
    }

    /// `⟨,⟩ ∘ σ̃ - ⟨,⟩` on `V ⊗ V`.
    pub fn symmetry_defect(&self, v: &ModuleSpec<F>, params: &Params<F>) -> Result<Matrix<F>, BraidingError> {
        let st = sigma_tilde(v, v, params)?;
        let row = self.as_row();
        Ok(row.mul(&st.matrix).sub(&row))
    }

    /// Whether the form is a module map `V ⊗ V -> k`.
    pub fn is_invariant(&self, v: &ModuleSpec<F>) -> bool {
        let vv = v.tensor(v);
        let row = self.as_row();
        Generator::ALL.iter().all(|&g| {
            let moved = row.mul(vv.action(g));
            match g {
                Generator::E | Generator::F => moved.is_zero(),
                Generator::K | Generator::KInv => moved == row,
            }
        })
    }
}

/// A solved constant next to the one stated in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct Constant<F> {
    pub name: &'static str,
    pub solved: F,
    pub displayed: F,
}

impl<F: Field> Constant<F> {
    pub fn agrees(&self) -> bool {
        self.solved == self.displayed
    }
}

#[derive(Debug, Clone)]
pub struct LeibnizCase<F: Field> {
    pub braiding: BraidingKind,
    pub value: ClElement<F>,
}

/// Candidate Leibniz rules for `ι_v0 (v2 vm2)` against the true contraction.
#[derive(Debug, Clone)]
pub struct LeibnizReport<F: Field> {
    pub cases: Vec<LeibnizCase<F>>,
    pub true_value: ClElement<F>,
}

impl<F: Field> LeibnizReport<F> {
    /// `candidate - true` as a multiple of `v0`, for each case.
    pub fn discrepancies(&self) -> Vec<Option<F>> {
        let v0 = ClElement::generator(1);
        self.cases
            .iter()
            .map(|case| proportionality(case.value.sub(&self.true_value).coeffs(), v0.coeffs()))
            .collect()
    }

    pub fn all_fail(&self) -> bool {
        self.discrepancies()
            .iter()
            .all(|d| matches!(d, Some(k) if !k.is_zero()))
    }
}

#[derive(Debug, Clone)]
pub struct RhoDecomposition<F: Field> {
    /// Dimension of the span of `α_q` on PBW words of length at most `n`, for `n = 0, 1, ...`.
    pub span_dims: Vec<usize>,
    pub alpha_image: Vec<Vec<F>>,
    pub invariant_part: [ClElement<F>; 2],
    pub rank: usize,
    pub gamma_square: F,
    pub iota_gamma_in_image: bool,
    pub dual_constant: Constant<F>,
}

/// PBW monomials `F^f K^k E^e` with `f + |k| + e = n`.
fn monomials_of_length(n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for f in 0..=n {
        for e in 0..=(n - f) {
            let k = (n - f - e) as i64;
            out.push(Monomial { f, k, e });
            if k != 0 {
                out.push(Monomial { f, k: -k, e });
            }
        }
    }
    out
}

impl<F: Field> Algebra<F, Clifford> {
    pub fn bilinear_form(&self) -> BilinearForm<F> {
        BilinearForm::new(self.params())
    }

    /// `γ_q = -(c v0 + v2 v0 vm2) / (2c^2)`.
    pub fn gamma(&self) -> ClElement<F> {
        let c = self.params().c();
        let k = F::from_integer(2).mul(c).mul(c).inv().expect("c is nonzero").neg();
        ClElement::generator(1)
            .scale(c)
            .add(&ClElement::basis(crate::algebra::TOP))
            .scale(&k)
    }

    /// `γ_q* = 4qc/(1+q^2) γ_q`.
    pub fn gamma_star(&self) -> ClElement<F> {
        let p = self.params();
        let k = F::from_integer(4)
            .mul(p.q())
            .mul(p.c())
            .div(&p.q_pow(2).add(&F::one()))
            .expect("1 + q^2 is nonzero");
        self.gamma().scale(&k)
    }

    /// `d ω = γ_q ω - (-1)^{p(ω)} ω γ_q`.
    pub fn d_cl_matrix(&self) -> Matrix<F> {
        let g = self.gamma();
        let cols: Vec<Vec<F>> = (0..DIM)
            .map(|j| {
                let e = ClElement::basis(j);
                let (left, right) = (self.mul(&g, &e), self.mul(&e, &g));
                let image = if parity(j) == 1 { left.add(&right) } else { left.sub(&right) };
                image.coeffs().to_vec()
            })
            .collect();
        Matrix::from_columns(DIM, &cols)
    }

    pub fn d_cl(&self, a: &ClElement<F>) -> ClElement<F> {
        self.apply(&self.d_cl_matrix(), a)
    }

    /// `ι_x = ½[x, -]` for a generator, braiding through `σ̃ : V ⊗ Cl -> Cl ⊗ V`.
    pub fn contraction_matrix(&self, letter: u8) -> Result<Matrix<F>, BraidingError> {
        let cols = (0..DIM)
            .map(|j| {
                self.half_commutator_with_generator(letter, &ClElement::basis(j))
                    .map(|e| e.coeffs().to_vec())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(DIM, &cols))
    }

    /// The same operator computed from `σ̃` on `Cl ⊗ Cl`.
    pub fn contraction_matrix_via_self_braiding(&self, letter: u8) -> Result<Matrix<F>, BraidingError> {
        let half = F::from_integer(2).inv().expect("2 is invertible");
        Ok(self.commutator_matrix(&ClElement::generator(letter))?.scale(&half))
    }

    /// `ι_x` for a basis monomial `x = x1 x2 ...`, as `ι_x1 ∘ ι_x2 ∘ ...`.
    pub fn monomial_contraction_matrix(&self, x: usize) -> Result<Matrix<F>, BraidingError> {
        crate::algebra::BASIS[x]
            .iter()
            .try_fold(Matrix::identity(DIM), |acc, &l| Ok(acc.mul(&self.contraction_matrix(l)?)))
    }

    pub fn contract(&self, x: usize, a: &ClElement<F>) -> Result<ClElement<F>, BraidingError> {
        Ok(self.apply(&self.monomial_contraction_matrix(x)?, a))
    }

    /// `α_q` on a generator of `U_q(sl2)`.
    pub fn alpha_generator(&self, g: Generator) -> ClElement<F> {
        let p = self.params();
        let one = F::one();
        let denom = one.add(&p.q_pow(2)).mul(p.c());
        let k = |num: F| num.div(&denom).expect("(1+q^2)c is nonzero");
        let cartan = k(p.q_pow(3).sub(p.q()));
        match g {
            Generator::E => ClElement::basis(4).scale(&k(p.q().neg())),
            Generator::F => ClElement::basis(6).scale(&k(p.q_pow(2).neg())),
            Generator::K => ClElement::basis(5).scale(&cartan).add(&ClElement::scalar(p.q_pow(-1))),
            Generator::KInv => ClElement::basis(5).scale(&cartan.neg()).add(&ClElement::scalar(p.q().clone())),
        }
    }

    /// The algebra morphism `α_q : U_q(sl2) -> Cl_q` on a PBW-normalised element.
    pub fn alpha(&self, w: &UqWord<F>) -> ClElement<F> {
        w.terms().fold(ClElement::zero(), |acc, (m, coeff)| {
            let factors: Vec<ClElement<F>> = m.letters().into_iter().map(|g| self.alpha_generator(g)).collect();
            acc.add(&self.product(&factors).scale(coeff))
        })
    }

    /// `β_q = (1+q^2)/q α_q` on `sl_q(2)`.
    pub fn beta(&self, x: &SlqElement<F>) -> ClElement<F> {
        let p = self.params();
        let k = p.q_pow(2).add(&F::one()).mul(&p.q_pow(-1));
        self.alpha(&x.to_uq(p)).scale(&k)
    }

    /// `ω ↦ Σ α_q(w_(1)) ω α_q(S(w_(2)))`.
    pub fn conjugation_action(&self, w: &UqWord<F>) -> Matrix<F> {
        let p = self.params();
        w.coproduct(p).iter().fold(Matrix::zeros(DIM, DIM), |acc, (a, b)| {
            let left = self.left_mul_matrix(&self.alpha(a));
            let right = self.right_mul_matrix(&self.alpha(&b.antipode(p)));
            acc.add(&left.mul(&right))
        })
    }

    /// `½ d_Cl` applied to `x` read in `V_2π`; the moment element with `d x = 2 μ(x)`.
    pub fn moment(&self, x: &SlqElement<F>) -> ClElement<F> {
        let half = F::from_integer(2).inv().expect("2 is invertible");
        let v = (0..3u8).fold(ClElement::zero(), |acc, l| {
            acc.add(&ClElement::generator(l).scale(&x.coords()[l as usize]))
        });
        self.d_cl(&v).scale(&half)
    }

    /// `ω ↦ [μ(x), ω]`.
    pub fn bracket_action(&self, x: &SlqElement<F>) -> Result<Matrix<F>, BraidingError> {
        self.commutator_matrix(&self.moment(x))
    }

    /// `L_x` for `x ∈ sl_q(2)`, checked against the conjugation and bracket routes.
    pub fn lie_derivative(&self, x: &SlqElement<F>) -> Result<Matrix<F>, QclError> {
        let reference = self.slq_action(x);
        let w = x.to_uq(self.params());
        let describe = || format!("{} X + {} Z + {} Y", x.x, x.z, x.y);
        if self.conjugation_action(&w) != reference {
            return Err(QclError::RouteDisagreement { element: describe(), route: "conjugation" });
        }
        if self.bracket_action(x)? != reference {
            return Err(QclError::RouteDisagreement { element: describe(), route: "bracket" });
        }
        Ok(reference)
    }

    /// The action of a generator of `U_q(sl2)`, checked against conjugation.
    pub fn generator_action(&self, g: Generator) -> Result<Matrix<F>, QclError> {
        let reference = self.action_matrix(g).clone();
        if self.conjugation_action(&UqWord::generator(g)) != reference {
            return Err(QclError::RouteDisagreement { element: g.to_string(), route: "conjugation" });
        }
        Ok(reference)
    }

    /// `α_q(lhs) - α_q(rhs)` for each defining relation of `U_q(sl2)`.
    pub fn alpha_relation_defects(&self) -> Vec<(&'static str, ClElement<F>)> {
        use Generator::*;
        let p = self.params();
        let a = |g| self.alpha_generator(g);
        let prod = |x: Generator, y: Generator| self.mul(&a(x), &a(y));
        let conj = |x: Generator| self.product(&[a(K), a(x), a(KInv)]);
        let cartan = a(K)
            .sub(&a(KInv))
            .scale(&p.q_minus_q_inv().inv().expect("q - q^-1 is nonzero"));
        vec![
            ("K K^-1 = 1", prod(K, KInv).sub(&ClElement::one())),
            ("K^-1 K = 1", prod(KInv, K).sub(&ClElement::one())),
            ("K E K^-1 = q^2 E", conj(E).sub(&a(E).scale(&p.q_pow(2)))),
            ("K F K^-1 = q^-2 F", conj(F).sub(&a(F).scale(&p.q_pow(-2)))),
            ("EF - FE = (K - K^-1)/(q - q^-1)", prod(E, F).sub(&prod(F, E)).sub(&cartan)),
        ]
    }

    /// `[ω, μ] + (-1)^{p(ω)p(μ)} [-,-] ∘ σ̃ (ω ⊗ μ)` on basis monomials.
    pub fn skew_symmetry_defect(&self, i: usize, j: usize) -> Result<ClElement<F>, BraidingError> {
        let st = self.sigma_tilde_self()?;
        let mut braided = ClElement::zero();
        for (idx, k) in st.image_of(i, j).iter().enumerate() {
            if !k.is_zero() {
                let b = self.sigma_commutator(&ClElement::basis(idx / DIM), &ClElement::basis(idx % DIM))?;
                braided = braided.add(&b.scale(k));
            }
        }
        let direct = self.sigma_commutator(&ClElement::basis(i), &ClElement::basis(j))?;
        Ok(if parity(i) * parity(j) == 1 { direct.sub(&braided) } else { direct.add(&braided) })
    }

    /// Whether `[e_i, e_j]` has filtration degree below `deg e_i + deg e_j`.
    pub fn bracket_lowers_filtration(&self, i: usize, j: usize) -> Result<bool, BraidingError> {
        let b = self.sigma_commutator(&ClElement::basis(i), &ClElement::basis(j))?;
        Ok(b.filtration_degree().is_none_or(|d| d < degree(i) + degree(j)))
    }

    /// The degree-`k` part of an element of filtration degree at most `k`.
    pub fn symbol(&self, a: &ClElement<F>, k: usize) -> Result<ExtElement<F>, QclError> {
        match a.filtration_degree() {
            Some(d) if d > k => Err(QclError::DegreeExceeded { degree: d, requested: k }),
            _ => Ok(a.component(k).reinterpret()),
        }
    }

    /// Cohomology of `d_Cl` graded by parity.
    pub fn cohomology(&self) -> Result<CohomologyReport<F>, CohomologyError> {
        cohomology(&self.d_cl_matrix(), &Grading::Parity((0..DIM).map(parity).collect()))
    }

    /// `β_q(x)` for the generator with the given letter.
    fn beta_letter(&self, letter: u8) -> ClElement<F> {
        self.beta(&SlqElement::basis()[letter as usize])
    }

    fn moment_letter(&self, letter: u8) -> ClElement<F> {
        self.moment(&SlqElement::basis()[letter as usize])
    }

    /// `d x = λ β_q(x)`, `ι_x γ_q = λ β_q(x)` and `L_x = λ [β_q(x), -]`, solved on all three generators.
    pub fn factor_constants(&self) -> Result<[Constant<F>; 3], QclError> {
        let common = |f: &dyn Fn(u8) -> Result<ClElement<F>, QclError>, name: &str| -> Result<F, QclError> {
            let mut found: Option<F> = None;
            for letter in 0..3u8 {
                let lhs = f(letter)?;
                let k = proportionality(lhs.coeffs(), self.beta_letter(letter).coeffs())
                    .ok_or_else(|| QclError::NotProportional(format!("{name} at {letter}")))?;
                if found.as_ref().is_some_and(|f| *f != k) {
                    return Err(QclError::NotProportional(name.to_string()));
                }
                found = Some(k);
            }
            Ok(found.expect("three generators"))
        };
        let d = common(&|l| Ok(self.d_cl(&ClElement::generator(l))), "d x")?;
        let iota = common(
            &|l| Ok(self.apply(&self.contraction_matrix(l)?, &self.gamma())),
            "iota_x gamma",
        )?;
        let lie = {
            let x = SlqElement::basis();
            let lhs: Vec<F> = (0..3).flat_map(|l| self.slq_action(&x[l]).entries().to_vec()).collect();
            let rhs = (0..3)
                .map(|l| self.commutator_matrix(&self.beta_letter(l as u8)).map(|m| m.entries().to_vec()))
                .collect::<Result<Vec<_>, _>>()?
                .concat();
            proportionality(&lhs, &rhs).ok_or_else(|| QclError::NotProportional("L_x".into()))?
        };
        Ok([
            Constant { name: "d x = λ β(x)", solved: d, displayed: F::from_integer(2) },
            Constant { name: "ι_x γ = λ β(x)", solved: iota, displayed: F::one() },
            Constant { name: "L_x = λ [β(x), -]", solved: lie, displayed: F::one() },
        ])
    }

    /// Splits `Cl_q` as the invariant subalgebra `span{1, γ_q}` times the image of `α_q`.
    pub fn rho_decomposition(&self) -> Result<RhoDecomposition<F>, QclError> {
        let mut span: Vec<Vec<F>> = Vec::new();
        let mut span_dims = Vec::new();
        for n in 0.. {
            let mut vectors = span.clone();
            for m in monomials_of_length(n) {
                vectors.push(self.alpha(&UqWord::monomial(m, F::one())).coeffs().to_vec());
            }
            span = Matrix::from_columns(DIM, &vectors).image_basis();
            let stable = span_dims.last() == Some(&span.len());
            span_dims.push(span.len());
            if stable {
                break;
            }
        }
        let invariant_part = [ClElement::one(), self.gamma()];
        let products: Vec<Vec<F>> = invariant_part
            .iter()
            .flat_map(|p| {
                span.iter()
                    .map(move |a| self.mul(p, &ClElement::from_coeffs(a.clone())).coeffs().to_vec())
            })
            .collect();
        let rank = Matrix::from_columns(DIM, &products).rank();
        if rank != DIM {
            return Err(QclError::RankDeficient { rank, expected: DIM });
        }
        let gamma = self.gamma();
        let square = self.mul(&gamma, &gamma);
        if square.filtration_degree().unwrap_or(0) > 0 {
            return Err(QclError::NotProportional("gamma^2".into()));
        }
        let image_rank = span.len();
        let mut in_image = true;
        let mut dual: Option<F> = None;
        for letter in 0..3u8 {
            let iota = self.apply(&self.contraction_matrix(letter)?, &gamma);
            let mut cols = span.clone();
            cols.push(iota.coeffs().to_vec());
            in_image &= Matrix::from_columns(DIM, &cols).rank() == image_rank;
            let lhs = self.mul(&iota, &self.gamma_star());
            let k = proportionality(lhs.coeffs(), ClElement::<F>::generator(letter).coeffs())
                .ok_or_else(|| QclError::NotProportional("iota_x gamma * gamma*".into()))?;
            if dual.as_ref().is_some_and(|d| *d != k) {
                return Err(QclError::NotProportional("iota_x gamma * gamma*".into()));
            }
            dual = Some(k);
        }
        Ok(RhoDecomposition {
            span_dims,
            alpha_image: span,
            invariant_part,
            rank,
            gamma_square: square.coeff(0).clone(),
            iota_gamma_in_image: in_image,
            dual_constant: Constant {
                name: "ι_x γ · γ* = λ x",
                solved: dual.expect("three generators"),
                displayed: F::one(),
            },
        })
    }

    /// `ι_x(ω) μ + (-1)^{p(ω)} Σ ω_i ι_{x_i}(μ)` with `braid(x ⊗ ω) = Σ ω_i ⊗ x_i`,
    /// for `x = v0`, `ω = v2`, `μ = vm2` and each of `σ`, `σ^-1`, `σ̃`.
    pub fn leibniz_counterexamples(&self) -> Result<LeibnizReport<F>, QclError> {
        let (x, omega, mu) = (1u8, 0u8, 2u8);
        let form = self.bilinear_form();
        let v = self.generators_module();
        let p = self.params();
        let braidings: [BraidingOp<F>; 3] = [sigma(v, v, p)?, sigma_inv(v, v, p)?, sigma_tilde(v, v, p)?];
        let head = ClElement::generator(mu).scale(form.pair(x, omega));
        let sign = if parity(letter_index(omega)) == 1 { F::one().neg() } else { F::one() };
        let cases = braidings
            .into_iter()
            .map(|b| {
                let image = b.image_of(x as usize, omega as usize);
                let tail = image.iter().enumerate().fold(ClElement::zero(), |acc, (idx, k)| {
                    let (w, xi) = ((idx / 3) as u8, (idx % 3) as u8);
                    acc.add(&ClElement::generator(w).scale(&k.mul(form.pair(xi, mu))))
                });
                LeibnizCase { braiding: b.kind, value: head.add(&tail.scale(&sign)) }
            })
            .collect();
        let true_value = self.apply(&self.contraction_matrix(x)?, &self.mul(&ClElement::generator(omega), &ClElement::generator(mu)));
        Ok(LeibnizReport { cases, true_value })
    }

    /// `ι_x ι_y d z - ⟨ad_x y, z⟩` for generators `x, y, z`.
    pub fn duality_defect(&self, x: u8, y: u8, z: u8) -> Result<ClElement<F>, QclError> {
        let d = self.d_cl(&ClElement::generator(z));
        let lhs = self.apply(&self.contraction_matrix(x)?, &self.apply(&self.contraction_matrix(y)?, &d));
        let ad = self.generators_module().action_of(&slq_basis(self.params())[x as usize]);
        let rhs = self.bilinear_form().evaluate(&ad.column(y as usize), &unit(z));
        Ok(lhs.sub(&ClElement::scalar(rhs)))
    }

    /// `[μ(x), μ(y)] - μ(ad_x y)` for generators `x, y`.
    pub fn moment_bracket_defect(&self, x: u8, y: u8) -> Result<ClElement<F>, QclError> {
        let lhs = self.sigma_commutator(&self.moment_letter(x), &self.moment_letter(y))?;
        let ad = self.generators_module().action_of(&slq_basis(self.params())[x as usize]);
        let col = ad.column(y as usize);
        let rhs = self.moment(&SlqElement::new(col[0].clone(), col[1].clone(), col[2].clone()));
        Ok(lhs.sub(&rhs))
    }

    /// Degree-`(k+1)` part of `d_Cl` on a degree-`k` monomial minus `d_∧` of its symbol,
    /// and likewise one degree down for each contraction.
    pub fn associated_graded_failures(&self, ext: &ExtAlgebra<F>) -> Result<Vec<String>, QclError> {
        let d_cl = self.d_cl_matrix();
        let d_ext = ext.d_ext_matrix();
        let mut out = Vec::new();
        for i in 0..DIM {
            let k = degree(i);
            let cl: ExtElement<F> = self.apply(&d_cl, &ClElement::basis(i)).component(k + 1).reinterpret();
            if cl != ext.apply(&d_ext, &Element::basis(i)) {
                out.push(format!("d {}", crate::algebra::LABELS[i]));
            }
            if k == 0 {
                continue;
            }
            for letter in 0..3u8 {
                let iota = self.apply(&self.contraction_matrix(letter)?, &ClElement::basis(i));
                let top: ExtElement<F> = iota.component(k - 1).reinterpret();
                if top != ext.apply(&ext.contraction_matrix(letter), &Element::basis(i)) {
                    out.push(format!("iota_{} {}", letter, crate::algebra::LABELS[i]));
                }
            }
        }
        Ok(out)
    }
}

fn unit<F: Field>(i: u8) -> Vec<F> {
    let mut v = vec![F::zero(); 3];
    v[i as usize] = F::one();
    v
}

/// `ad ∘ σ̃ + ad` on `sl_q(2) ⊗ sl_q(2)`, where `ad(x ⊗ y) = ad_x y`.
pub fn adjoint_braiding_defect<F: Field>(params: &Params<F>) -> Result<Matrix<F>, BraidingError> {
    let v = ModuleSpec::v2pi(params)?;
    let basis = slq_basis(params);
    let ad = Matrix::from_columns(
        3,
        &(0..9)
            .map(|idx| v.action_of(&basis[idx / 3]).column(idx % 3))
            .collect::<Vec<_>>(),
    );
    let st = sigma_tilde(&v, &v, params)?;
    Ok(ad.mul(&st.matrix).add(&ad))
}

impl<F: Field> DifferentialSpace<F> for Algebra<F, Clifford> {
    fn dim(&self) -> usize {
        DIM
    }

    fn lie_derivative(&self, letter: u8) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.lie_derivative_of_letter(letter))
    }

    fn contraction(&self, letter: u8) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.contraction_matrix(letter)?)
    }

    fn differential(&self) -> Result<Matrix<F>, AlgebraError> {
        Ok(self.d_cl_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn cl() -> ClAlgebra<Scalar> {
        ClAlgebra::new(Params::symbolic()).unwrap()
    }

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn e(a: &ClAlgebra<Scalar>, text: &str) -> ClElement<Scalar> {
        a.eval(&crate::expr::parse(text).unwrap(), Some(&a.gamma())).unwrap()
    }

    #[test]
    fn relations() {
        let a = cl();
        assert_eq!(e(&a, "vm2*v2"), e(&a, "-v2*vm2 + (q^2+1)/q^2*c"));
        assert_eq!(e(&a, "v0*v0"), e(&a, "(1-q^4)/q^3*v2*vm2 + (q^2+1)/q*c"));
        assert!(e(&a, "(v2*v0)*v2").is_zero());
        assert!(a.associativity_failures().is_empty());
    }

    #[test]
    fn gamma_and_differential() {
        let a = cl();
        let g = a.gamma();
        assert_eq!(a.mul(&g, &g), ClElement::scalar(s("(1+q^2)/(4*c*q)")));
        assert!(a.is_invariant(&g));
        assert_eq!(a.d_cl(&e(&a, "v2")), e(&a, "-1/c*v2*v0"));
        assert_eq!(a.d_cl(&e(&a, "vm2")), e(&a, "-1/c*v0*vm2"));
        assert!(a.differential_squares_to_zero().unwrap());
    }

    #[test]
    fn contractions() {
        let a = cl();
        assert_eq!(a.contract(3, &e(&a, "v2")).unwrap(), e(&a, "q^-2*c"));
        assert_eq!(a.contract(2, &e(&a, "v2*vm2")).unwrap(), e(&a, "c*(1-q^2)/q^2*v0"));
        let top = e(&a, "v2*v0*vm2");
        let both = a.contraction_matrix(0).unwrap().mul(&a.contraction_matrix(1).unwrap());
        assert_eq!(a.apply(&both, &top), e(&a, "(1+q^2)/q*c^2*v2"));
        for l in 0..3 {
            assert_eq!(
                a.contraction_matrix(l).unwrap(),
                a.contraction_matrix_via_self_braiding(l).unwrap()
            );
        }
    }

    #[test]
    fn alpha_and_beta() {
        let a = cl();
        let p = a.params();
        let [x, z, _] = slq_basis(p);
        assert_eq!(a.alpha(&z), e(&a, "1/c*v2*vm2 - 1"));
        assert_eq!(a.beta(&SlqElement::basis()[0]), e(&a, "-1/c*v2*v0"));
        assert_eq!(a.alpha(&x), a.alpha_generator(Generator::E));
        assert!(a.alpha_relation_defects().iter().all(|(_, d)| d.is_zero()));
    }

    #[test]
    fn three_routes_agree() {
        let a = cl();
        for x in SlqElement::basis() {
            a.lie_derivative(&x).unwrap();
        }
        for g in Generator::ALL {
            a.generator_action(g).unwrap();
        }
        assert!(a.satisfies_cartan().unwrap());
    }

    #[test]
    fn leibniz_candidates_fail() {
        let a = cl();
        let report = a.leibniz_counterexamples().unwrap();
        let values: Vec<_> = report.cases.iter().map(|c| c.value.clone()).collect();
        assert_eq!(values[0], e(&a, "-c*(q^4-1)/q^2*v0"));
        assert!(values[1].is_zero());
        assert_eq!(values[2], e(&a, "-c*(q^4-1)/(1+q^4)*v0"));
        assert_eq!(report.true_value, e(&a, "c*(1-q^2)/q^2*v0"));
        assert!(report.all_fail());
    }

    #[test]
    fn rho_and_constants() {
        let a = cl();
        let rho = a.rho_decomposition().unwrap();
        assert_eq!(rho.alpha_image.len(), 4);
        assert_eq!(rho.rank, 8);
        assert_eq!(rho.gamma_square, s("(1+q^2)/(4*c*q)"));
        assert!(rho.iota_gamma_in_image);
        assert!(rho.dual_constant.agrees());
        let [d, iota, lie] = a.factor_constants().unwrap();
        assert_eq!((d.solved, iota.solved, lie.solved), (Scalar::one(), s("1/2"), s("1/2")));
        assert_eq!(a.moment(&SlqElement::basis()[0]), a.beta(&SlqElement::basis()[0]).scale(&s("1/2")));
    }

    #[test]
    fn cohomology_vanishes() {
        let report = cl().cohomology().unwrap();
        assert!(report.is_acyclic());
        assert_eq!((report.total_cycles(), report.total_boundaries()), (4, 4));
    }

    #[test]
    fn symbol_and_graded() {
        let a = cl();
        let ext = ExtAlgebra::new(Params::symbolic()).unwrap();
        let sym = a.symbol(&e(&a, "vm2*v2"), 2).unwrap();
        assert_eq!(sym, ExtElement::basis(5).neg());
        assert!(matches!(a.symbol(&a.gamma(), 2), Err(QclError::DegreeExceeded { .. })));
        assert!(a.associated_graded_failures(&ext).unwrap().is_empty());
    }

    #[test]
    fn form_and_brackets() {
        let a = cl();
        let p = a.params();
        let form = a.bilinear_form();
        assert!(form.symmetry_defect(a.generators_module(), p).unwrap().is_zero());
        assert!(form.is_invariant(a.generators_module()));
        assert!(adjoint_braiding_defect(p).unwrap().is_zero());
        for x in 0..3 {
            for y in 0..3 {
                assert!(a.moment_bracket_defect(x, y).unwrap().is_zero());
                for z in 0..3 {
                    assert!(a.duality_defect(x, y, z).unwrap().is_zero());
                }
            }
        }
    }
}
