use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::params::rational_sqrt;
use super::poly::MultiPoly;
use super::{Field, Params, ScalarError};

/// An element of `Q(u, c)`, where `q = u^2`.
///
/// Always stored in canonical form: numerator and denominator are coprime and
/// the denominator is monic in lexicographic order (`u` before `c`). Equality
/// is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: MultiPoly,
    den: MultiPoly,
}

impl Scalar {
    /// Canonicalises `num / den`.
    pub fn from_parts(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero_value());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::normalised_coprime(num, den))
    }

    /// Makes the denominator monic; inputs must already be coprime.
    fn normalised_coprime(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading_coeff();
        if One::is_one(&lc) {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    fn zero_value() -> Self {
        Scalar {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Scalar {
            num: p,
            den: MultiPoly::one(),
        }
    }

    /// The square root `u` of `q`.
    pub fn u() -> Self {
        Self::from_poly(MultiPoly::u())
    }

    pub fn q() -> Self {
        Self::from_poly(MultiPoly::u().pow(2))
    }

    pub fn c() -> Self {
        Self::from_poly(MultiPoly::c())
    }

    /// `q^k`.
    pub fn q_power(k: i64) -> Self {
        Self::q_power_half(2 * k)
    }

    /// `q^(k/2) = u^k`.
    pub fn q_power_half(k: i64) -> Self {
        let m = MultiPoly::monomial((k.unsigned_abs() as u32, 0), <BigRational as One>::one());
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Scalar {
                num: MultiPoly::one(),
                den: m,
            }
        }
    }

    /// The q-integer `[n]`.
    pub fn q_int(n: i64) -> Self {
        Params::symbolic().q_int(n)
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    /// Exact value at rational `q` and `c`.
    ///
    /// Odd powers of `u = q^(1/2)` need `q` to be a rational square; the
    /// positive root is used.
    pub fn specialize(&self, q: &BigRational, c: &BigRational) -> Result<BigRational, ScalarError> {
        let (n, d) = if self.num.has_odd_u() || self.den.has_odd_u() {
            let u = rational_sqrt(q).ok_or(ScalarError::OddHalfPowerAtNonSquare)?;
            (self.num.eval(&u, c), self.den.eval(&u, c))
        } else {
            (
                self.num.eval_even(q, c).expect("even u-powers"),
                self.den.eval_even(q, c).expect("even u-powers"),
            )
        };
        if Zero::is_zero(&d) {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(n / d)
    }

    /// Rendering with `u` written as `q^(1/2)` and integer coefficients, e.g.
    /// `(1-q^4)/q^3`. A power of `c` dividing the numerator is written as a
    /// trailing factor: `(q^2+1)/q^2 * c`.
    pub fn render(&self) -> String {
        let k = self.num.monomial_content().1;
        let num = self.num.shift_down((0, k));
        let (num, den) = integral(&num, &self.den);
        let c_power = match k {
            0 => String::new(),
            1 => "c".to_string(),
            k => format!("c^{k}"),
        };
        let with_c = |n: String| -> String {
            match (n.as_str(), c_power.is_empty()) {
                (_, true) => n,
                ("1", false) => c_power.clone(),
                ("-1", false) => format!("-{c_power}"),
                _ => format!("{n}*{c_power}"),
            }
        };
        let num_text = render_poly(&num);
        if den.is_one() {
            return if num.num_terms() > 1 && k > 0 {
                format!("({num_text})*{c_power}")
            } else {
                with_c(num_text)
            };
        }
        let j = den.monomial_content().1;
        let den_text = if j > 0 && den.num_terms() > 1 {
            let c_den = if j == 1 { "c".to_string() } else { format!("c^{j}") };
            format!("({})*{c_den}", render_poly(&den.shift_down((0, j))))
        } else {
            render_poly(&den)
        };
        let den_text = if den.num_terms() > 1 || den_text.contains('*') || den_text.contains('/') {
            format!("({den_text})")
        } else {
            den_text
        };
        if num.num_terms() > 1 {
            let fraction = format!("({num_text})/{den_text}");
            if k > 0 {
                format!("{fraction} * {c_power}")
            } else {
                fraction
            }
        } else {
            format!("{}/{den_text}", with_c(num_text))
        }
    }

    /// Whether the string form needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        self.num.num_terms() > 1
            || !self.den.is_one()
            || self
                .num
                .terms()
                .first()
                .map(|(_, v)| v.is_negative() || !v.is_integer())
                .unwrap_or(false)
    }
}

fn render_monomial((a, b): (u32, u32)) -> String {
    let mut parts = Vec::new();
    if a > 0 {
        parts.push(match (a % 2, a / 2) {
            (0, 1) => "q".to_string(),
            (0, k) => format!("q^{}", k),
            (_, _) => format!("q^({}/2)", a),
        });
    }
    if b > 0 {
        parts.push(if b == 1 {
            "c".to_string()
        } else {
            format!("c^{}", b)
        });
    }
    parts.join("*")
}

/// Clears rational coefficients from `num / den` by a common factor.
fn integral(num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let l = num
        .terms()
        .iter()
        .chain(den.terms())
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    if l.is_one() {
        return (num.clone(), den.clone());
    }
    let l = BigRational::from_integer(l);
    (num.scale(&l), den.scale(&l))
}

fn render_term((e, v): &((u32, u32), BigRational)) -> String {
    let mono = render_monomial(*e);
    if mono.is_empty() {
        v.to_string()
    } else if One::is_one(v) {
        mono
    } else if One::is_one(&-v) {
        format!("-{}", mono)
    } else {
        format!("{}*{}", v, mono)
    }
}

/// Descending powers of `q` then `c`, or ascending when that avoids a leading sign.
fn render_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms = p.terms();
    let ascending = terms[0].1.is_negative() && terms[terms.len() - 1].1.is_positive();
    let ordered: Vec<_> = if ascending {
        terms.iter().rev().collect()
    } else {
        terms.iter().collect()
    };
    let mut out = String::new();
    for (i, t) in ordered.into_iter().enumerate() {
        let term = render_term(t);
        if i > 0 && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

impl Field for Scalar {
    fn zero() -> Self {
        Self::zero_value()
    }

    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    fn from_integer(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_integer(n))
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(r.clone()))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            return Self::from_parts(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            // coprime denominators: only the numerator can share factors with them
            return Self::from_parts(num, self.den.mul(&other.den)).expect("nonzero denominator");
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        Self::from_parts(num, a.mul(&other.den)).expect("nonzero denominator")
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalised_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalised_coprime(self.den.clone(), self.num.clone()))
    }

    fn complexity(&self) -> usize {
        let size = |p: &MultiPoly| {
            p.terms()
                .iter()
                .map(|(_, v)| 1 + (v.numer().bits() + v.denom().bits()) as usize / 32)
                .sum::<usize>()
        };
        size(&self.num) + size(&self.den)
    }

    fn q_half_exponent(&self, _params: &Params<Self>) -> Option<i64> {
        let pure_u = |p: &MultiPoly| match p.terms() {
            [((a, 0), v)] if One::is_one(v) => Some(*a as i64),
            _ => None,
        };
        match (pure_u(&self.num), pure_u(&self.den)) {
            (Some(a), Some(0)) => Some(a),
            (Some(0), Some(b)) => Some(-b),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render())
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let expr = crate::expr::parse(s)?;
        expr.eval_scalar()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Self::from_rational(&BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                std::ops::$tr::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Field::add(a, b));
forward_binop!(Sub, sub, |a, b| Field::sub(a, b));
forward_binop!(Mul, mul, |a, b| Field::mul(a, b));
// panics on a zero divisor, like integer division
forward_binop!(Div, div, |a, b| Field::div(a, b).expect("division by zero"));

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(&self)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn addition_examples() {
        let q = Scalar::q();
        assert_eq!(&q + &q, s("2*q"));
        assert!((s("q/(q-1)") + s("1/(1-q)")).is_one());
        assert!((s("(1-q^4)/q^3") + s("(q^4-1)/q^3")).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(s("(q-1/q)*(q+1/q)"), s("q^2 - q^-2"));
        assert_eq!(Scalar::q().inv().unwrap(), s("1/q"));
        assert!((Scalar::c() * s("1/c")).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn q_powers_and_integers() {
        assert_eq!(Scalar::q_power(1), Scalar::q());
        assert_eq!(Scalar::q_power_half(1), Scalar::u());
        assert_eq!(Scalar::q_power(-2), s("1/q^2"));
        assert!(Scalar::q_int(1).is_one());
        assert_eq!(Scalar::q_int(2), s("q + 1/q"));
        assert!(Scalar::q_int(0).is_zero());
    }

    #[test]
    fn specialisation_examples() {
        assert_eq!(s("q+1").specialize(&r(2, 1), &r(1, 1)).unwrap(), r(3, 1));
        assert_eq!(
            s("(1-q^4)/q^3").specialize(&r(2, 1), &r(1, 1)).unwrap(),
            r(-15, 8)
        );
        assert_eq!(
            s("1/(q-1)").specialize(&r(1, 1), &r(1, 1)),
            Err(ScalarError::PoleAtPoint)
        );
        assert_eq!(
            Scalar::u().specialize(&r(2, 1), &r(1, 1)),
            Err(ScalarError::OddHalfPowerAtNonSquare)
        );
        assert_eq!(Scalar::u().specialize(&r(9, 4), &r(1, 1)).unwrap(), r(3, 2));
    }

    #[test]
    fn rendering() {
        assert_eq!(s("(1-q^4)/q^3").to_string(), "(1-q^4)/q^3");
        assert_eq!(s("1/q").to_string(), "1/q");
        assert_eq!(Scalar::u().to_string(), "q^(1/2)");
        assert_eq!(s("-c/(2*q)").to_string(), "-c/(2*q)");
        assert_eq!(s("c*(q^2+1)/q^2").to_string(), "(q^2+1)/q^2 * c");
        assert_eq!(s("(q^4-1)*c^2").to_string(), "(q^4-1)*c^2");
        assert_eq!(s("1/(2*c*q)").to_string(), "1/(2*q*c)");
        assert_eq!(s("3*c/(q+1/2)").to_string(), "6*c/(2*q+1)");
        assert_eq!(s("-q/((q^2+1)*c)").to_string(), "-q/((q^2+1)*c)");
        for text in ["(1-q^4)/q^3", "q^(3/2)/(1+q^4)", "-1/2*c/q", "2*q^2/(1+q^4)", "c/(q^2+c)", "(q^2+1)/q^2 * c", "q/((q^4+1)*c^2)"] {
            let v = s(text);
            assert_eq!(s(&v.to_string()), v);
        }
    }
}
