//! `U_q(sl2)` as a rewriting system on PBW monomials `F^a K^b E^c`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::render::linear_combination;
use crate::scalar::{Field, Params};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("ad_{generator} maps {element} outside span{{X, Z, Y}}")]
    ClosureViolation { generator: Generator, element: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::K, Generator::KInv];

    pub fn name(self) -> &'static str {
        match self {
            Generator::E => "E",
            Generator::F => "F",
            Generator::K => "K",
            Generator::KInv => "K^-1",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The PBW monomial `F^f K^k E^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub f: u32,
    pub k: i64,
    pub e: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { f: 0, k: 0, e: 0 };

    /// The letters of the monomial, left to right.
    pub fn letters(self) -> Vec<Generator> {
        let mut out = vec![Generator::F; self.f as usize];
        let k = if self.k < 0 { Generator::KInv } else { Generator::K };
        out.extend(std::iter::repeat_n(k, self.k.unsigned_abs() as usize));
        out.extend(std::iter::repeat_n(Generator::E, self.e as usize));
        out
    }

    /// `K`-weight: `K m K^-1 = q^weight m`.
    pub fn weight(self) -> i64 {
        2 * (self.e as i64 - self.f as i64)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let power = |name: &str, n: i64| {
            if n == 1 {
                name.to_string()
            } else {
                format!("{}^{}", name, n)
            }
        };
        if self.f > 0 {
            parts.push(power("F", self.f as i64));
        }
        if self.k != 0 {
            parts.push(power("K", self.k));
        }
        if self.e > 0 {
            parts.push(power("E", self.e as i64));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// A linear combination of PBW monomials; always in normal form.
#[derive(Clone, PartialEq)]
pub struct UqWord<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> UqWord<F> {
    pub fn zero() -> Self {
        UqWord {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, F::one())
    }

    pub fn scalar(x: F) -> Self {
        Self::monomial(Monomial::ONE, x)
    }

    pub fn monomial(m: Monomial, coeff: F) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        UqWord { terms }
    }

    pub fn generator(g: Generator) -> Self {
        let m = match g {
            Generator::E => Monomial { f: 0, k: 0, e: 1 },
            Generator::F => Monomial { f: 1, k: 0, e: 0 },
            Generator::K => Monomial { f: 0, k: 1, e: 0 },
            Generator::KInv => Monomial { f: 0, k: -1, e: 0 },
        };
        Self::monomial(m, F::one())
    }

    /// Normal form of a word in the generators.
    pub fn from_word(word: &[Generator], params: &Params<F>) -> Self {
        word.iter()
            .fold(Self::one(), |acc, &g| acc.mul_generator(g, params))
    }

    /// Normal form of a linear combination of words.
    pub fn normalize(words: &[(Vec<Generator>, F)], params: &Params<F>) -> Self {
        words.iter().fold(Self::zero(), |acc, (w, c)| {
            acc.add(&Self::from_word(w, params).scale(c))
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(F::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        UqWord {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.mul(k)))
                .collect(),
        }
    }

    /// Right multiplication by a single generator.
    pub fn mul_generator(&self, g: Generator, params: &Params<F>) -> Self {
        let mut out = Self::zero();
        for (m, coeff) in &self.terms {
            for (m2, c2) in mul_monomial_generator(*m, g, params) {
                out.add_term(m2, coeff.mul(&c2));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self, params: &Params<F>) -> Self {
        let mut out = Self::zero();
        for (m, coeff) in &other.terms {
            let prod = m
                .letters()
                .into_iter()
                .fold(self.clone(), |acc, g| acc.mul_generator(g, params));
            out = out.add(&prod.scale(coeff));
        }
        out
    }

    /// Counit: `E, F -> 0`, `K -> 1`.
    pub fn counit(&self) -> F {
        self.terms
            .iter()
            .filter(|(m, _)| m.f == 0 && m.e == 0)
            .fold(F::zero(), |acc, (_, c)| acc.add(c))
    }

    /// Antipode, extended as an algebra antimorphism.
    pub fn antipode(&self, params: &Params<F>) -> Self {
        let mut out = Self::zero();
        for (m, coeff) in &self.terms {
            let image = m
                .letters()
                .into_iter()
                .rev()
                .fold(Self::one(), |acc, g| acc.mul(&antipode(g, params), params));
            out = out.add(&image.scale(coeff));
        }
        out
    }

    /// Coproduct as a list of tensor terms `(x1, x2)`.
    pub fn coproduct(&self, params: &Params<F>) -> Vec<(UqWord<F>, UqWord<F>)> {
        let mut out = Vec::new();
        for (m, coeff) in &self.terms {
            let mut acc = vec![(Self::scalar(coeff.clone()), Self::one())];
            for g in m.letters() {
                let mut next = Vec::new();
                for (a, b) in &acc {
                    for (x, y) in coproduct(g) {
                        next.push((a.mul(&x, params), b.mul(&y, params)));
                    }
                }
                acc = next;
            }
            out.extend(acc);
        }
        out.retain(|(a, b)| !a.is_zero() && !b.is_zero());
        out
    }

    /// Same element with coefficients mapped into another field.
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<UqWord<G>, E> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(*m, v);
            }
        }
        Ok(UqWord { terms })
    }
}

fn mul_monomial_generator<F: Field>(
    m: Monomial,
    g: Generator,
    params: &Params<F>,
) -> Vec<(Monomial, F)> {
    match g {
        Generator::E => vec![(Monomial { e: m.e + 1, ..m }, F::one())],
        Generator::K => vec![(Monomial { k: m.k + 1, ..m }, params.q_pow(-2 * m.e as i64))],
        Generator::KInv => vec![(Monomial { k: m.k - 1, ..m }, params.q_pow(2 * m.e as i64))],
        Generator::F => {
            // F^a K^b E^c F = q^-2b F^(a+1) K^b E^c + sum_i F^a K^b (q^-2i K - q^2i K^-1) E^(c-1) / (q - q^-1)
            let mut out = vec![(
                Monomial { f: m.f + 1, ..m },
                params.q_pow(-2 * m.k),
            )];
            if m.e > 0 {
                let denom = params
                    .q_minus_q_inv()
                    .inv()
                    .expect("q - q^-1 is nonzero");
                let mut plus = F::zero();
                let mut minus = F::zero();
                for i in 0..m.e as i64 {
                    plus = plus.add(&params.q_pow(-2 * i));
                    minus = minus.add(&params.q_pow(2 * i));
                }
                out.push((
                    Monomial { k: m.k + 1, e: m.e - 1, ..m },
                    plus.mul(&denom),
                ));
                out.push((
                    Monomial { k: m.k - 1, e: m.e - 1, ..m },
                    minus.mul(&denom).neg(),
                ));
            }
            out
        }
    }
}

/// Sweedler decomposition of the coproduct of a generator.
pub fn coproduct<F: Field>(g: Generator) -> Vec<(UqWord<F>, UqWord<F>)> {
    use Generator::*;
    let gen = UqWord::generator;
    match g {
        E => vec![(gen(E), gen(K)), (UqWord::one(), gen(E))],
        F => vec![(gen(F), UqWord::one()), (gen(KInv), gen(F))],
        K => vec![(gen(K), gen(K))],
        KInv => vec![(gen(KInv), gen(KInv))],
    }
}

pub fn antipode<F: Field>(g: Generator, params: &Params<F>) -> UqWord<F> {
    use Generator::*;
    match g {
        E => UqWord::from_word(&[E, KInv], params).neg(),
        F => UqWord::from_word(&[K, F], params).neg(),
        K => UqWord::generator(KInv),
        KInv => UqWord::generator(K),
    }
}

/// `ad_g y = Σ g(1) y S(g(2))` for a generator `g`.
pub fn adjoint<F: Field>(g: Generator, y: &UqWord<F>, params: &Params<F>) -> UqWord<F> {
    coproduct::<F>(g)
        .into_iter()
        .fold(UqWord::zero(), |acc, (a, b)| {
            acc.add(&a.mul(y, params).mul(&b.antipode(params), params))
        })
}

/// `ad_x y` for an arbitrary `x`, using `ad_{gh} = ad_g ∘ ad_h` on each monomial.
pub fn adjoint_by<F: Field>(x: &UqWord<F>, y: &UqWord<F>, params: &Params<F>) -> UqWord<F> {
    x.terms().fold(UqWord::zero(), |acc, (m, c)| {
        let image = m
            .letters()
            .into_iter()
            .rev()
            .fold(y.clone(), |v, g| adjoint(g, &v, params));
        acc.add(&image.scale(c))
    })
}

/// Element `x X + z Z + y Y` of the quantised adjoint module `sl_q(2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlqElement<F> {
    pub x: F,
    pub z: F,
    pub y: F,
}

impl<F: Field> SlqElement<F> {
    pub fn new(x: F, z: F, y: F) -> Self {
        SlqElement { x, z, y }
    }

    /// The basis vectors `X, Z, Y` in that order.
    pub fn basis() -> [SlqElement<F>; 3] {
        let (o, z) = (F::one(), F::zero());
        [
            SlqElement::new(o.clone(), z.clone(), z.clone()),
            SlqElement::new(z.clone(), o.clone(), z.clone()),
            SlqElement::new(z.clone(), z, o),
        ]
    }

    pub fn coords(&self) -> [F; 3] {
        [self.x.clone(), self.z.clone(), self.y.clone()]
    }

    pub fn to_uq(&self, params: &Params<F>) -> UqWord<F> {
        let [x, z, y] = slq_basis(params);
        x.scale(&self.x).add(&z.scale(&self.z)).add(&y.scale(&self.y))
    }

    /// Coordinates of `w` in `(X, Z, Y)`, if `w` lies in their span.
    pub fn from_uq(w: &UqWord<F>, params: &Params<F>) -> Option<Self> {
        let basis = slq_basis(params);
        let coords = coordinates(&basis, w).ok()?;
        Some(SlqElement::new(
            coords[0].clone(),
            coords[1].clone(),
            coords[2].clone(),
        ))
    }
}

/// `X = E`, `Z = q^-2 EF - FE`, `Y = KF` as PBW elements.
pub fn slq_basis<F: Field>(params: &Params<F>) -> [UqWord<F>; 3] {
    use Generator::*;
    let x = UqWord::generator(E);
    let z = UqWord::from_word(&[E, F], params)
        .scale(&params.q_pow(-2))
        .sub(&UqWord::from_word(&[F, E], params));
    let y = UqWord::from_word(&[K, F], params);
    [x, z, y]
}

/// Coordinates of `w` in the span of `basis`.
pub fn coordinates<F: Field>(basis: &[UqWord<F>], w: &UqWord<F>) -> Result<Vec<F>, LinalgError> {
    let mut monomials: Vec<Monomial> = basis
        .iter()
        .chain(std::iter::once(w))
        .flat_map(|b| b.terms().map(|(m, _)| *m))
        .collect();
    monomials.sort();
    monomials.dedup();
    let m = Matrix::from_fn(monomials.len(), basis.len(), |i, j| {
        basis[j].coefficient(&monomials[i])
    });
    let rhs: Vec<F> = monomials.iter().map(|mono| w.coefficient(mono)).collect();
    m.solve(&rhs)
}

/// Matrix of `ad_g` on the ordered basis `(X, Z, Y)`; columns are images.
pub fn adjoint_matrix<F: Field>(g: Generator, params: &Params<F>) -> Result<Matrix<F>, UqError> {
    let basis = slq_basis(params);
    let mut columns = Vec::new();
    for b in &basis {
        let image = adjoint(g, b, params);
        let coords = coordinates(&basis, &image).map_err(|_| UqError::ClosureViolation {
            generator: g,
            element: b.to_string(),
        })?;
        columns.push(coords);
    }
    Ok(Matrix::from_columns(3, &columns))
}

impl<F: Field> fmt::Display for UqWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let label = if *m == Monomial::ONE { String::new() } else { m.to_string() };
                (c.to_string(), label)
            })
            .collect();
        let text = linear_combination(labels.iter().map(|(c, l)| (c.clone(), l.as_str())), " ");
        f.write_str(&text)
    }
}

impl<F: Field> fmt::Debug for UqWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UqWord({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use proptest::prelude::*;
    use Generator::*;

    fn p() -> Params<Scalar> {
        Params::symbolic()
    }

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn defining_relations() {
        let p = p();
        let ef = UqWord::from_word(&[E, F], &p);
        let expected = UqWord::from_word(&[F, E], &p).add(
            &UqWord::generator(K)
                .sub(&UqWord::generator(KInv))
                .scale(&p.q_minus_q_inv().inv().unwrap()),
        );
        assert_eq!(ef, expected);
        assert_eq!(
            UqWord::from_word(&[K, E], &p),
            UqWord::from_word(&[E, K], &p).scale(&s("q^2"))
        );
        assert_eq!(UqWord::from_word(&[K, KInv], &p), UqWord::one());
        assert_eq!(UqWord::from_word(&[KInv, K], &p), UqWord::one());
    }

    #[test]
    fn rendering() {
        let p = p();
        let w = UqWord::from_word(&[F, KInv, E, E], &p);
        assert_eq!(w.to_string(), "F K^-1 E^2");
        assert_eq!(UqWord::<Scalar>::one().to_string(), "1");
    }

    #[test]
    fn hopf_spot_checks() {
        let p = p();
        for g in [E, F, K] {
            let lhs = coproduct::<Scalar>(g)
                .into_iter()
                .fold(UqWord::zero(), |acc, (a, b)| acc.add(&a.antipode(&p).mul(&b, &p)));
            let rhs = UqWord::scalar(UqWord::<Scalar>::generator(g).counit());
            assert_eq!(lhs, rhs, "{}", g);
        }
    }

    #[test]
    fn adjoint_examples() {
        let p = p();
        let [x, z, _] = slq_basis(&p);
        assert_eq!(adjoint(K, &x, &p), x.scale(&s("q^2")));
        assert_eq!(adjoint(K, &z, &p), z);
        assert!(adjoint(E, &x, &p).is_zero());
    }

    #[test]
    fn adjoint_matrices() {
        let p = p();
        let k = adjoint_matrix(K, &p).unwrap();
        assert_eq!(k, Matrix::diagonal(&[s("q^2"), s("1"), s("q^-2")]));
        let e = adjoint_matrix(E, &p).unwrap();
        let f = adjoint_matrix(F, &p).unwrap();
        let qq = s("-(q+1/q)");
        let z = Scalar::zero;
        let expected_e = Matrix::new(3, 3, vec![z(), qq.clone(), z(), z(), z(), s("1"), z(), z(), z()]);
        let expected_f = Matrix::new(3, 3, vec![z(), z(), z(), s("-1"), z(), z(), z(), qq.neg(), z()]);
        assert_eq!(e, expected_e);
        assert_eq!(f, expected_f);
        assert!(e.pow(3).is_zero() && !e.pow(2).is_zero());
        assert!(f.pow(3).is_zero() && !f.pow(2).is_zero());
        let kinv = adjoint_matrix(KInv, &p).unwrap();
        assert!(k.mul(&kinv).is_identity());
    }

    #[test]
    fn slq_round_trip() {
        let p = p();
        let v = SlqElement::new(s("q"), s("c"), s("1/q"));
        assert_eq!(SlqElement::from_uq(&v.to_uq(&p), &p), Some(v));
        assert_eq!(SlqElement::from_uq(&UqWord::one(), &p), None);
    }

    fn word() -> impl Strategy<Value = Vec<Generator>> {
        proptest::collection::vec(proptest::sample::select(Generator::ALL.to_vec()), 0..=6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn association_order_is_irrelevant(w in word(), i in 0usize..7, j in 0usize..7) {
            let p = p();
            let (i, j) = (i.min(w.len()), j.min(w.len()));
            let (i, j) = (i.min(j), i.max(j));
            let a = UqWord::from_word(&w[..i], &p);
            let b = UqWord::from_word(&w[i..j], &p);
            let c = UqWord::from_word(&w[j..], &p);
            let left = a.mul(&b, &p).mul(&c, &p);
            let right = a.mul(&b.mul(&c, &p), &p);
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(left, UqWord::from_word(&w, &p));
        }
    }
}
