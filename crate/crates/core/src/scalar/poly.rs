//! Sparse bivariate polynomials in `u` and `c` with rational coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(deg_u, deg_c)`. Ordered lexicographically with `u` major.
pub type Exponent = (u32, u32);

/// A polynomial in `Q[u, c]`.
///
/// Terms are kept sorted by exponent in descending lexicographic order and
/// never carry a zero coefficient, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Exponent, BigRational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(value: BigRational) -> Self {
        Self::monomial((0, 0), value)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(exp: Exponent, coeff: BigRational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            MultiPoly {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// The generator `u` (with `q = u^2`).
    pub fn u() -> Self {
        Self::monomial((1, 0), BigRational::one())
    }

    pub fn c() -> Self {
        Self::monomial((0, 1), BigRational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(terms: I) -> Self {
        let mut terms: Vec<(Exponent, BigRational)> = terms.into_iter().collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Exponent, BigRational)> = Vec::with_capacity(terms.len());
        for (e, v) in terms {
            match out.last_mut() {
                Some((le, lv)) if *le == e => *lv += v,
                _ => out.push((e, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        MultiPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Exponent, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [((0, 0), v)] => Some(v.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Exponent, BigRational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree_u(&self) -> u32 {
        self.terms.first().map(|t| t.0 .0).unwrap_or(0)
    }

    pub fn degree_c(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exponent {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return (0, 0);
        };
        it.fold(first.0, |(a, b), t| (a.min(t.0 .0), b.min(t.0 .1)))
    }

    /// Divides every term by `u^a c^b`; the monomial must divide each term.
    pub fn shift_down(&self, (a, b): Exponent) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|((x, y), v)| ((x - a, y - b), v.clone()))
                .collect(),
        }
    }

    pub fn shift_up(&self, (a, b): Exponent) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|((x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * k)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let v = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, v));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let ((a, b), v) = &self.terms[0];
            return MultiPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|((x, y), w)| ((x + a, y + b), v * w))
                    .collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.mul(self);
        }
        let mut acc: Vec<(Exponent, BigRational)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((a, b), v) in &self.terms {
            for ((x, y), w) in &other.terms {
                acc.push(((a + x, b + y), v * w));
            }
        }
        Self::from_terms(acc)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if divisor.is_one() {
            return Some(self.clone());
        }
        if divisor.is_monomial() {
            let ((a, b), v) = &divisor.terms[0];
            let inv = v.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for ((x, y), w) in &self.terms {
                if x < a || y < b {
                    return None;
                }
                terms.push(((x - a, y - b), w * &inv));
            }
            return Some(MultiPoly { terms });
        }
        let ((du, dc), dv) = divisor.terms[0].clone();
        let dinv = dv.recip();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(((ru, rc), rv)) = rem.terms.first().cloned() {
            // lex leading term of the divisor must divide the remainder's leading term
            if ru < du || rc < dc {
                return None;
            }
            let e = (ru - du, rc - dc);
            let k = &rv * &dinv;
            rem = rem.sub(&divisor.shift_up(e).scale(&k));
            quot.push((e, k));
        }
        Some(MultiPoly::from_terms(quot))
    }

    /// Evaluates at rational `u` and `c`.
    pub fn eval(&self, u: &BigRational, c: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, b), v) in &self.terms {
            acc += v * pow_rat(u, *a) * pow_rat(c, *b);
        }
        acc
    }

    /// Evaluates with every `u`-exponent halved (substitutes `u^2 = q`).
    /// Returns `None` if some `u`-exponent is odd.
    pub fn eval_even(&self, q: &BigRational, c: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for ((a, b), v) in &self.terms {
            if a % 2 == 1 {
                return None;
            }
            acc += v * pow_rat(q, a / 2) * pow_rat(c, *b);
        }
        Some(acc)
    }

    pub fn has_odd_u(&self) -> bool {
        self.terms.iter().any(|((a, _), _)| a % 2 == 1)
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.recip())
        }
    }

    pub fn leading_is_negative(&self) -> bool {
        self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false)
    }
}

pub(crate) fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    num_traits::pow::pow(x.clone(), n as usize)
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*u^{}*c^{}", v, a, b)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            terms
                .iter()
                .map(|(e, v)| (*e, BigRational::from_integer(BigInt::from(*v)))),
        )
    }

    #[test]
    fn merge_cancels() {
        let a = p(&[((2, 0), 1), ((0, 1), 3)]);
        let b = p(&[((2, 0), -1), ((0, 0), 2)]);
        assert_eq!(a.add(&b), p(&[((0, 1), 3), ((0, 0), 2)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division() {
        // (u^2 - 1) = (u - 1)(u + 1)
        let a = p(&[((2, 0), 1), ((0, 0), -1)]);
        let b = p(&[((1, 0), 1), ((0, 0), -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[((1, 0), 1), ((0, 0), 1)])));
        let c = p(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(a.div_exact(&c), None);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = p(&[((1, 0), 1), ((0, 1), -2)]);
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert!(a.pow(0).is_one());
    }
}
