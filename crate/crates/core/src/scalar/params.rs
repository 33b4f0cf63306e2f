use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Scalar, ScalarError};

/// Where the parameters `q` and `c` live.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// `q = u^2` and `c` are indeterminates of `Q(u, c)`.
    Symbolic,
    /// `q` and `c` are fixed rational numbers.
    At { q: BigRational, c: BigRational },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symbolic => write!(f, "symbolic"),
            Mode::At { q, c } => write!(f, "q={}, c={}", q, c),
        }
    }
}

/// The deformation parameter `q` and the Clifford parameter `c` as elements of `F`.
#[derive(Debug, Clone)]
pub struct Params<F: Field> {
    q: F,
    q_inv: F,
    c: F,
    sqrt_q: Option<F>,
    mode: Mode,
}

const HALF_EXPONENT_SEARCH: i64 = 160;

impl<F: Field> Params<F> {
    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn c(&self) -> &F {
        &self.c
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> F {
        let base = if k < 0 { &self.q_inv } else { &self.q };
        let mut acc = F::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    }

    /// `q^(k/2)`.
    pub fn q_pow_half(&self, k: i64) -> Result<F, ScalarError> {
        if k % 2 == 0 {
            return Ok(self.q_pow(k / 2));
        }
        let root = self
            .sqrt_q
            .as_ref()
            .ok_or(ScalarError::OddHalfPowerAtNonSquare)?;
        let odd = if k < 0 { root.inv()? } else { root.clone() };
        Ok(self.q_pow((k - k.signum()) / 2).mul(&odd))
    }

    /// The q-integer `[n] = (q^n - q^-n)/(q - q^-1)`, expanded as a Laurent sum.
    pub fn q_int(&self, n: i64) -> F {
        if n < 0 {
            return self.q_int(-n).neg();
        }
        let mut acc = F::zero();
        let mut k = n - 1;
        while k >= -(n - 1) && n > 0 {
            acc = acc.add(&self.q_pow(k));
            k -= 2;
        }
        acc
    }

    pub fn q_factorial(&self, n: u32) -> F {
        (1..=n as i64).fold(F::one(), |acc, k| acc.mul(&self.q_int(k)))
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv(&self) -> F {
        self.q.sub(&self.q_inv)
    }

    pub(crate) fn search_half_exponent(&self, x: &F) -> Option<i64> {
        if x.is_zero() {
            return None;
        }
        for k in 0..=HALF_EXPONENT_SEARCH {
            for s in [k, -k] {
                if let Ok(v) = self.q_pow_half(s) {
                    if v == *x {
                        return Some(s);
                    }
                }
                if k == 0 {
                    break;
                }
            }
        }
        None
    }
}

impl Params<Scalar> {
    /// Generic parameters over `Q(u, c)`.
    pub fn symbolic() -> Self {
        let u = Scalar::u();
        let q = u.mul(&u);
        Params {
            q_inv: q.inv().expect("q is nonzero"),
            q,
            c: Scalar::c(),
            sqrt_q: Some(u),
            mode: Mode::Symbolic,
        }
    }
}

impl Params<BigRational> {
    /// Parameters specialised at rational `q` and `c`.
    ///
    /// `q` must avoid `0` and `+-1` (where `q - q^-1` vanishes) and `c` must be nonzero.
    pub fn at(q: BigRational, c: BigRational) -> Result<Self, ScalarError> {
        if Zero::is_zero(&q) || One::is_one(&q.abs()) {
            return Err(ScalarError::InvalidPoint(format!("q = {} is excluded", q)));
        }
        if Zero::is_zero(&c) {
            return Err(ScalarError::InvalidPoint("c must be nonzero".into()));
        }
        Ok(Params {
            q_inv: q.recip(),
            sqrt_q: rational_sqrt(&q),
            mode: Mode::At {
                q: q.clone(),
                c: c.clone(),
            },
            q,
            c,
        })
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub(crate) fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

#[allow(dead_code)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        let p = Params::symbolic();
        assert!(p.q_int(0).is_zero());
        assert!(p.q_int(1).is_one());
        let q = p.q().clone();
        assert_eq!(p.q_int(2), q.add(&q.inv().unwrap()));
        assert_eq!(p.q_int(-2), p.q_int(2).neg());
    }

    #[test]
    fn half_powers() {
        let p = Params::symbolic();
        assert_eq!(p.q_pow_half(1).unwrap(), Scalar::u());
        assert_eq!(p.q_pow_half(2).unwrap(), p.q().clone());
        assert_eq!(
            p.q_pow_half(-4).unwrap(),
            p.q().mul(p.q()).inv().unwrap()
        );
        let r = Params::at(rat(9, 4), rat(1, 1)).unwrap();
        assert_eq!(r.q_pow_half(1).unwrap(), rat(3, 2));
        assert_eq!(r.q_pow_half(-3).unwrap(), rat(8, 27));
        let r = Params::at(rat(7, 5), rat(1, 1)).unwrap();
        assert_eq!(r.q_pow_half(1), Err(ScalarError::OddHalfPowerAtNonSquare));
        assert_eq!(r.q_half_exponent_of(&rat(49, 25)), Some(4));
    }

    #[test]
    fn rejects_degenerate_points() {
        assert!(Params::at(rat(1, 1), rat(1, 1)).is_err());
        assert!(Params::at(rat(-1, 1), rat(1, 1)).is_err());
        assert!(Params::at(rat(0, 1), rat(1, 1)).is_err());
        assert!(Params::at(rat(2, 1), rat(0, 1)).is_err());
    }

    impl Params<BigRational> {
        fn q_half_exponent_of(&self, x: &BigRational) -> Option<i64> {
            x.q_half_exponent(self)
        }
    }
}
