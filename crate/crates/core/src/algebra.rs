//! Machinery shared by the two 8-dimensional algebras generated by `v2, v0, vm2`.
//!
//! Both algebras use the basis of ordered monomials
//! `1; v2, v0, vm2; v2v0, v2vm2, v0vm2; v2v0vm2` and the same rewriting rules,
//! except that the Clifford algebra adds a scalar term to `v0v0` and `vm2v2`.
//! An [`Algebra`] value holds the multiplication table, the `U_q(sl2)`-action
//! and the lazily built normalised braidings.

use std::fmt;
use std::marker::PhantomData;
use std::sync::OnceLock;

use thiserror::Error;

use crate::braiding::{sigma_tilde, BraidingError, BraidingOp};
use crate::expr::{Atom as AtomKind, Expr, Param as ParamKind};
use crate::linalg::{LinalgError, Matrix};
use crate::render::linear_combination;
use crate::repn::{ModuleSpec, ReprError};
use crate::scalar::{Field, Params, ScalarError};
use crate::uq::{coproduct, slq_basis, Generator, SlqElement, UqWord};

pub const DIM: usize = 8;

/// Letters `0, 1, 2` stand for `v2, v0, vm2`.
pub const BASIS: [&[u8]; DIM] = [&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]];

pub const LABELS: [&str; DIM] = ["1", "v2", "v0", "vm2", "v2*v0", "v2*vm2", "v0*vm2", "v2*v0*vm2"];

pub const LETTER_WEIGHTS: [i64; 3] = [2, 0, -2];

/// Index of the top monomial `v2 v0 vm2`.
pub const TOP: usize = 7;

pub fn degree(i: usize) -> usize {
    BASIS[i].len()
}

pub fn parity(i: usize) -> usize {
    degree(i) % 2
}

pub fn weight(i: usize) -> i64 {
    BASIS[i].iter().map(|&l| LETTER_WEIGHTS[l as usize]).sum()
}

/// Basis index of the degree-one generator with the given letter.
pub fn letter_index(letter: u8) -> usize {
    1 + letter as usize
}

fn index_of(word: &[u8]) -> usize {
    BASIS.iter().position(|b| *b == word).expect("ordered word")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("atom `{0}` does not belong to this algebra")]
    UnknownAtom(String),
    #[error("cannot divide by an element of positive degree")]
    NonScalarDivision,
    #[error("negative or fractional powers of algebra elements are not defined")]
    BadPower,
    #[error("{0} differs from the table derived from the braiding")]
    TableMismatch(String),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which of the two algebras; decides the scalar part of the rewriting rules.
pub trait AlgebraKind: Copy + Default + fmt::Debug + Send + Sync + 'static {
    const NAME: &'static str;
    const CLIFFORD: bool;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Exterior;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Clifford;

impl AlgebraKind for Exterior {
    const NAME: &'static str = "ext";
    const CLIFFORD: bool = false;
}

impl AlgebraKind for Clifford {
    const NAME: &'static str = "cl";
    const CLIFFORD: bool = true;
}

/// An element as coefficients on the monomial basis.
pub struct Element<F, K> {
    coeffs: Vec<F>,
    kind: PhantomData<K>,
}

pub type ExtElement<F> = Element<F, Exterior>;
pub type ClElement<F> = Element<F, Clifford>;

impl<F: Clone, K> Clone for Element<F, K> {
    fn clone(&self) -> Self {
        Element {
            coeffs: self.coeffs.clone(),
            kind: PhantomData,
        }
    }
}

impl<F: PartialEq, K> PartialEq for Element<F, K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field, K: AlgebraKind> Element<F, K> {
    pub fn zero() -> Self {
        Self::from_coeffs(vec![F::zero(); DIM])
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn scalar(x: F) -> Self {
        Self::basis(0).scale(&x)
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = vec![F::zero(); DIM];
        coeffs[i] = F::one();
        Self::from_coeffs(coeffs)
    }

    /// The generator `v2`, `v0` or `vm2` for letter `0`, `1` or `2`.
    pub fn generator(letter: u8) -> Self {
        Self::basis(letter_index(letter))
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert_eq!(coeffs.len(), DIM, "an element has {} coefficients", DIM);
        Element {
            coeffs,
            kind: PhantomData,
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &F {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.neg()).collect())
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(k)).collect())
    }

    /// Part spanned by monomials of the given degree.
    pub fn component(&self, deg: usize) -> Self {
        Self::from_coeffs(
            (0..DIM)
                .map(|i| if degree(i) == deg { self.coeffs[i].clone() } else { F::zero() })
                .collect(),
        )
    }

    /// Part spanned by monomials of the given parity.
    pub fn parity_part(&self, p: usize) -> Self {
        Self::from_coeffs(
            (0..DIM)
                .map(|i| if parity(i) == p { self.coeffs[i].clone() } else { F::zero() })
                .collect(),
        )
    }

    /// Largest degree with a nonzero coefficient, `None` for zero.
    pub fn filtration_degree(&self) -> Option<usize> {
        (0..DIM).filter(|&i| !self.coeffs[i].is_zero()).map(degree).max()
    }

    /// Parity if the element is homogeneous and nonzero.
    pub fn parity(&self) -> Option<usize> {
        let mut found = None;
        for i in (0..DIM).filter(|&i| !self.coeffs[i].is_zero()) {
            match found {
                None => found = Some(parity(i)),
                Some(p) if p != parity(i) => return None,
                _ => {}
            }
        }
        found
    }

    /// Same coefficients read in the other algebra.
    pub fn reinterpret<L: AlgebraKind>(&self) -> Element<F, L> {
        Element::from_coeffs(self.coeffs.clone())
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Element<G, K>, E> {
        Ok(Element::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }
}

impl<F: Field, K: AlgebraKind> fmt::Display for Element<F, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut order: Vec<usize> = (0..DIM).filter(|&i| !self.coeffs[i].is_zero()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(degree(i)));
        let terms = order
            .into_iter()
            .map(|i| (coeffs[i].clone(), if i == 0 { "" } else { LABELS[i] }));
        f.write_str(&linear_combination(terms, " * "))
    }
}

impl<F: Field, K: AlgebraKind> fmt::Debug for Element<F, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", K::NAME, self)
    }
}

/// One of the two algebras over a coefficient field.
pub struct Algebra<F: Field, K> {
    params: Params<F>,
    v: ModuleSpec<F>,
    table: Vec<Vec<Element<F, K>>>,
    module: ModuleSpec<F>,
    sigma_self: OnceLock<Result<BraidingOp<F>, BraidingError>>,
    sigma_from_v: OnceLock<Result<BraidingOp<F>, BraidingError>>,
}

impl<F: Field, K: AlgebraKind> Algebra<F, K> {
    pub fn new(params: Params<F>) -> Result<Self, AlgebraError> {
        let v = ModuleSpec::v2pi(&params)?;
        let mut table = Vec::with_capacity(DIM);
        for i in 0..DIM {
            let mut row = Vec::with_capacity(DIM);
            for j in 0..DIM {
                let word: Vec<u8> = BASIS[i].iter().chain(BASIS[j]).copied().collect();
                row.push(Element::from_coeffs(normal_form::<F, K>(&word, &params)));
            }
            table.push(row);
        }
        let mut alg = Algebra {
            params,
            module: v.clone(),
            v,
            table,
            sigma_self: OnceLock::new(),
            sigma_from_v: OnceLock::new(),
        };
        alg.module = alg.build_module();
        alg.module.check(&alg.params)?;
        Ok(alg)
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    /// The adjoint module `V_2π` of degree-one generators.
    pub fn generators_module(&self) -> &ModuleSpec<F> {
        &self.v
    }

    /// The algebra itself as a `U_q(sl2)`-module.
    pub fn module(&self) -> &ModuleSpec<F> {
        &self.module
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Element<F, K> {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &Element<F, K>, b: &Element<F, K>) -> Element<F, K> {
        let mut out = vec![F::zero(); DIM];
        for i in (0..DIM).filter(|&i| !a.coeffs[i].is_zero()) {
            for j in (0..DIM).filter(|&j| !b.coeffs[j].is_zero()) {
                let k = a.coeffs[i].mul(&b.coeffs[j]);
                for (o, t) in out.iter_mut().zip(&self.table[i][j].coeffs) {
                    if !t.is_zero() {
                        *o = o.add(&t.mul(&k));
                    }
                }
            }
        }
        Element::from_coeffs(out)
    }

    pub fn product(&self, factors: &[Element<F, K>]) -> Element<F, K> {
        factors.iter().fold(Element::one(), |acc, x| self.mul(&acc, x))
    }

    /// Matrix of `ω ↦ a ω`.
    pub fn left_mul_matrix(&self, a: &Element<F, K>) -> Matrix<F> {
        let columns: Vec<Vec<F>> = (0..DIM).map(|j| self.mul(a, &Element::basis(j)).coeffs).collect();
        Matrix::from_columns(DIM, &columns)
    }

    /// Matrix of `ω ↦ ω a`.
    pub fn right_mul_matrix(&self, a: &Element<F, K>) -> Matrix<F> {
        let columns: Vec<Vec<F>> = (0..DIM).map(|j| self.mul(&Element::basis(j), a).coeffs).collect();
        Matrix::from_columns(DIM, &columns)
    }

    pub fn apply(&self, op: &Matrix<F>, a: &Element<F, K>) -> Element<F, K> {
        Element::from_coeffs(op.apply(&a.coeffs))
    }

    pub fn action_matrix(&self, g: Generator) -> &Matrix<F> {
        self.module.action(g)
    }

    pub fn act(&self, g: Generator, a: &Element<F, K>) -> Element<F, K> {
        self.apply(self.action_matrix(g), a)
    }

    /// Matrix of the action of an arbitrary element of `U_q(sl2)`.
    pub fn action_of(&self, w: &UqWord<F>) -> Matrix<F> {
        self.module.action_of(w)
    }

    /// Lie derivative `L_x` for `x` in `sl_q(2)`: the action of `xX + zZ + yY`.
    pub fn slq_action(&self, x: &SlqElement<F>) -> Matrix<F> {
        self.action_of(&x.to_uq(&self.params))
    }

    /// `L_x` for the degree-one generator with the given letter (`v2 ↔ X`, `v0 ↔ Z`, `vm2 ↔ Y`).
    pub fn lie_derivative_of_letter(&self, letter: u8) -> Matrix<F> {
        self.action_of(&slq_basis(&self.params)[letter as usize])
    }

    fn build_module(&self) -> ModuleSpec<F> {
        // images[g][i] of basis monomial i, built from shorter monomials
        let gens = Generator::ALL;
        let mut images: Vec<Vec<Element<F, K>>> = vec![Vec::with_capacity(DIM); gens.len()];
        for i in 0..DIM {
            let word = BASIS[i];
            for (gi, &g) in gens.iter().enumerate() {
                let image = if word.is_empty() {
                    match g {
                        Generator::E | Generator::F => Element::zero(),
                        _ => Element::one(),
                    }
                } else {
                    let v = Element::generator(word[0]);
                    let rest = index_of(&word[1..]);
                    let on_v = |h: Generator| self.act_on_generator(h, word[0]);
                    let on_rest = |h: Generator| images[gen_index(h)][rest].clone();
                    let rest_elem = Element::basis(rest);
                    match g {
                        Generator::E => self
                            .mul(&on_v(Generator::E), &on_rest(Generator::K))
                            .add(&self.mul(&v, &on_rest(Generator::E))),
                        Generator::F => self
                            .mul(&on_v(Generator::F), &rest_elem)
                            .add(&self.mul(&on_v(Generator::KInv), &on_rest(Generator::F))),
                        Generator::K | Generator::KInv => self.mul(&on_v(g), &on_rest(g)),
                    }
                };
                images[gi].push(image);
            }
        }
        let matrix = |g: Generator| {
            let cols: Vec<Vec<F>> = images[gen_index(g)].iter().map(|e| e.coeffs.clone()).collect();
            Matrix::from_columns(DIM, &cols)
        };
        ModuleSpec::new(
            LABELS.iter().map(|s| s.to_string()).collect(),
            (0..DIM).map(weight).collect(),
            matrix(Generator::E),
            matrix(Generator::F),
            &self.params,
        )
    }

    fn act_on_generator(&self, g: Generator, letter: u8) -> Element<F, K> {
        let col = self.v.action(g).column(letter as usize);
        let mut coeffs = vec![F::zero(); DIM];
        for (l, c) in col.into_iter().enumerate() {
            coeffs[1 + l] = c;
        }
        Element::from_coeffs(coeffs)
    }

    /// `σ̃` on `A ⊗ A`, computed once.
    pub fn sigma_tilde_self(&self) -> Result<&BraidingOp<F>, BraidingError> {
        self.sigma_self
            .get_or_init(|| sigma_tilde(&self.module, &self.module, &self.params))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `σ̃ : V ⊗ A -> A ⊗ V`, computed once.
    pub fn sigma_tilde_from_generators(&self) -> Result<&BraidingOp<F>, BraidingError> {
        self.sigma_from_v
            .get_or_init(|| sigma_tilde(&self.v, &self.module, &self.params))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `m ∘ σ̃ (e_i ⊗ e_j)`.
    pub fn braided_product(&self, i: usize, j: usize) -> Result<Element<F, K>, BraidingError> {
        let st = self.sigma_tilde_self()?;
        let image = st.image_of(i, j);
        let mut out = Element::zero();
        for (idx, c) in image.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.table[idx / DIM][idx % DIM].scale(c));
            }
        }
        Ok(out)
    }

    /// The braided supercommutator `[a, b] = ab - (-1)^{p(a)p(b)} m σ̃(a ⊗ b)`, extended bilinearly
    /// from basis monomials.
    pub fn sigma_commutator(&self, a: &Element<F, K>, b: &Element<F, K>) -> Result<Element<F, K>, BraidingError> {
        let mut out = Element::zero();
        for i in (0..DIM).filter(|&i| !a.coeffs[i].is_zero()) {
            for j in (0..DIM).filter(|&j| !b.coeffs[j].is_zero()) {
                let mut term = self.table[i][j].clone();
                let braided = self.braided_product(i, j)?;
                term = if parity(i) * parity(j) == 1 {
                    term.add(&braided)
                } else {
                    term.sub(&braided)
                };
                out = out.add(&term.scale(&a.coeffs[i].mul(&b.coeffs[j])));
            }
        }
        Ok(out)
    }

    /// Matrix of `ω ↦ [a, ω]`.
    pub fn commutator_matrix(&self, a: &Element<F, K>) -> Result<Matrix<F>, BraidingError> {
        let columns = (0..DIM)
            .map(|j| self.sigma_commutator(a, &Element::basis(j)).map(|e| e.coeffs))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(DIM, &columns))
    }

    /// `½[x, ω]` for a degree-one generator `x`, braiding through `σ̃ : V ⊗ A -> A ⊗ V`.
    pub fn half_commutator_with_generator(&self, letter: u8, omega: &Element<F, K>) -> Result<Element<F, K>, BraidingError> {
        let st = self.sigma_tilde_from_generators()?;
        let half = F::from_integer(2).inv().expect("2 is invertible");
        let mut out = Element::zero();
        for j in (0..DIM).filter(|&j| !omega.coeffs[j].is_zero()) {
            let image = st.image_of(letter as usize, j);
            let mut braided = Element::zero();
            for (idx, c) in image.iter().enumerate() {
                if !c.is_zero() {
                    let (k, l) = (idx / 3, idx % 3);
                    braided = braided.add(&self.table[k][letter_index(l as u8)].scale(c));
                }
            }
            let direct = self.table[letter_index(letter)][j].clone();
            let term = if parity(j) == 1 { direct.add(&braided) } else { direct.sub(&braided) };
            out = out.add(&term.scale(&omega.coeffs[j]));
        }
        Ok(out.scale(&half))
    }

    /// Basis triples `(i, j, k)` with `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                let left = &self.table[i][j];
                for k in 0..DIM {
                    let lhs = self.mul(left, &Element::basis(k));
                    let rhs = self.mul(&Element::basis(i), &self.table[j][k]);
                    if lhs != rhs {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// `g ▷ (a b) - Σ (g_(1) ▷ a)(g_(2) ▷ b)` on basis monomials.
    pub fn module_algebra_defect(&self, g: Generator, i: usize, j: usize) -> Element<F, K> {
        let lhs = self.act(g, &self.table[i][j]);
        let rhs = coproduct::<F>(g).iter().fold(Element::zero(), |acc, (x, y)| {
            let a = self.apply(&self.action_of(x), &Element::basis(i));
            let b = self.apply(&self.action_of(y), &Element::basis(j));
            acc.add(&self.mul(&a, &b))
        });
        lhs.sub(&rhs)
    }

    pub fn module_algebra_failures(&self) -> Vec<(Generator, usize, usize)> {
        let mut out = Vec::new();
        for g in Generator::ALL {
            for i in 0..DIM {
                for j in 0..DIM {
                    if !self.module_algebra_defect(g, i, j).is_zero() {
                        out.push((g, i, j));
                    }
                }
            }
        }
        out
    }

    /// Whether `g ▷ a = ε(g) a` for every generator.
    pub fn is_invariant(&self, a: &Element<F, K>) -> bool {
        Generator::ALL.iter().all(|&g| {
            let expected = match g {
                Generator::E | Generator::F => Element::zero(),
                Generator::K | Generator::KInv => a.clone(),
            };
            self.act(g, a) == expected
        })
    }

    /// Evaluates a parsed expression; `gamma` is resolved by `gamma`.
    pub fn eval(&self, expr: &Expr, gamma: Option<&Element<F, K>>) -> Result<Element<F, K>, AlgebraError> {
        use Expr::*;
        Ok(match expr {
            Int(_) | Param(_) => Element::scalar(self.eval_scalar(expr)?),
            Atom(a) => match a {
                AtomKind::V2 => Element::generator(0),
                AtomKind::V0 => Element::generator(1),
                AtomKind::Vm2 => Element::generator(2),
                AtomKind::Gamma => gamma
                    .cloned()
                    .ok_or_else(|| AlgebraError::UnknownAtom(AtomKind::Gamma.name().to_string()))?,
            },
            Neg(a) => self.eval(a, gamma)?.neg(),
            Add(a, b) => self.eval(a, gamma)?.add(&self.eval(b, gamma)?),
            Sub(a, b) => self.eval(a, gamma)?.sub(&self.eval(b, gamma)?),
            Mul(a, b) => self.mul(&self.eval(a, gamma)?, &self.eval(b, gamma)?),
            Div(a, b) => {
                if b.has_atoms() {
                    return Err(AlgebraError::NonScalarDivision);
                }
                self.eval(a, gamma)?.scale(&self.eval_scalar(b)?.inv()?)
            }
            Pow(a, e) => {
                if !a.has_atoms() {
                    return Ok(Element::scalar(self.eval_scalar(expr)?));
                }
                let n = e.integer().filter(|n| *n >= 0).ok_or(AlgebraError::BadPower)?;
                let base = self.eval(a, gamma)?;
                (0..n).fold(Element::one(), |acc, _| self.mul(&acc, &base))
            }
        })
    }

    /// Evaluates an atom-free expression in the coefficient field.
    pub fn eval_scalar(&self, expr: &Expr) -> Result<F, AlgebraError> {
        use Expr::*;
        Ok(match expr {
            Int(n) => F::from_rational(&num_rational::BigRational::from_integer(n.clone())),
            Param(ParamKind::Q) => self.params.q().clone(),
            Param(ParamKind::C) => self.params.c().clone(),
            Atom(a) => return Err(AlgebraError::UnknownAtom(a.name().to_string())),
            Neg(a) => self.eval_scalar(a)?.neg(),
            Add(a, b) => self.eval_scalar(a)?.add(&self.eval_scalar(b)?),
            Sub(a, b) => self.eval_scalar(a)?.sub(&self.eval_scalar(b)?),
            Mul(a, b) => self.eval_scalar(a)?.mul(&self.eval_scalar(b)?),
            Div(a, b) => self.eval_scalar(a)?.div(&self.eval_scalar(b)?)?,
            Pow(a, e) => match (a.as_ref(), e.integer()) {
                (_, Some(n)) => self.eval_scalar(a)?.pow(n)?,
                (Param(ParamKind::Q), None) => self.params.q_pow_half(e.num)?,
                _ => return Err(AlgebraError::BadPower),
            },
        })
    }
}

fn gen_index(g: Generator) -> usize {
    Generator::ALL.iter().position(|&h| h == g).expect("generator")
}

/// Rewrites a word in the letters to coefficients on the monomial basis.
fn normal_form<F: Field, K: AlgebraKind>(word: &[u8], params: &Params<F>) -> Vec<F> {
    let mut out = vec![F::zero(); DIM];
    let Some(i) = word.windows(2).position(|w| w[0] >= w[1]) else {
        out[index_of(word)] = F::one();
        return out;
    };
    for (replacement, coeff) in rewrite::<F, K>(word[i], word[i + 1], params) {
        let next: Vec<u8> = word[..i]
            .iter()
            .chain(&replacement)
            .chain(&word[i + 2..])
            .copied()
            .collect();
        for (o, x) in out.iter_mut().zip(normal_form::<F, K>(&next, params)) {
            if !x.is_zero() {
                *o = o.add(&x.mul(&coeff));
            }
        }
    }
    out
}

/// The rule for an out-of-order pair `a >= b`.
fn rewrite<F: Field, K: AlgebraKind>(a: u8, b: u8, params: &Params<F>) -> Vec<(Vec<u8>, F)> {
    let q = |k| params.q_pow(k);
    let c = params.c();
    match (a, b) {
        (1, 0) => vec![(vec![0, 1], q(-2).neg())],
        (2, 1) => vec![(vec![1, 2], q(-2).neg())],
        (1, 1) => {
            let mut out = vec![(vec![0, 2], F::one().sub(&q(4)).mul(&q(-3)))];
            if K::CLIFFORD {
                out.push((vec![], q(2).add(&F::one()).mul(&q(-1)).mul(c)));
            }
            out
        }
        (2, 0) => {
            let mut out = vec![(vec![0, 2], F::one().neg())];
            if K::CLIFFORD {
                out.push((vec![], q(2).add(&F::one()).mul(&q(-2)).mul(c)));
            }
            out
        }
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn basis_metadata() {
        assert_eq!((0..DIM).map(weight).collect::<Vec<_>>(), vec![0, 2, 0, -2, 2, 0, -2, 0]);
        assert_eq!((0..DIM).map(parity).collect::<Vec<_>>(), vec![0, 1, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn rendering() {
        let e = ClElement::<Scalar>::basis(5).neg().add(&ClElement::scalar(s("(q^2+1)*c/q^2")));
        assert_eq!(e.to_string(), "-v2*vm2 + (q^2+1)/q^2 * c");
        assert_eq!(ExtElement::<Scalar>::zero().to_string(), "0");
        assert_eq!(ExtElement::<Scalar>::basis(4).scale(&s("-1/q^2")).to_string(), "-1/q^2 * v2*v0");
    }

    #[test]
    fn module_structure_of_both_algebras() {
        let ext = Algebra::<Scalar, Exterior>::new(Params::symbolic()).unwrap();
        let cl = Algebra::<Scalar, Clifford>::new(Params::symbolic()).unwrap();
        assert_eq!(ext.module().invariants().len(), 2);
        assert_eq!(cl.module().decompose().unwrap().highest_weights(), vec![2, 2, 0, 0]);
    }
}
