//! Greatest common divisors in `Q[u, c]`.
//!
//! Polynomials are viewed as elements of `Q[c][u]`. The gcd splits into the
//! gcd of the `u`-contents (univariate Euclid over `Q`) times the gcd of the
//! primitive parts, obtained from a primitive pseudo-remainder sequence.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::MultiPoly;

/// Dense univariate polynomial in `c`, ascending coefficients, no trailing zeros.
type Poly1 = Vec<BigRational>;
/// Polynomial in `u` with `Q[c]` coefficients, ascending in `u`.
type UPoly = Vec<Poly1>;

fn trim1(p: &mut Poly1) {
    while p.last().map(|x| x.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn is_zero1(p: &Poly1) -> bool {
    p.is_empty()
}

fn mul1(a: &Poly1, b: &Poly1) -> Poly1 {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim1(&mut out);
    out
}

fn sub1(a: &Poly1, b: &Poly1) -> Poly1 {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim1(&mut out);
    out
}

/// Quotient and remainder of univariate division.
fn divrem1(a: &Poly1, b: &Poly1) -> (Poly1, Poly1) {
    let mut rem = a.clone();
    if b.len() > rem.len() {
        return (Vec::new(), rem);
    }
    let lb = b.last().expect("nonzero divisor").recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let k = rem.last().unwrap() * &lb;
        for (i, y) in b.iter().enumerate() {
            rem[i + shift] -= &k * y;
        }
        quot[shift] = k;
        rem.pop();
        trim1(&mut rem);
    }
    trim1(&mut quot);
    (quot, rem)
}

fn monic1(p: &Poly1) -> Poly1 {
    match p.last() {
        None => Vec::new(),
        Some(l) if l.is_one() => p.clone(),
        Some(l) => {
            let inv = l.recip();
            p.iter().map(|x| x * &inv).collect()
        }
    }
}

fn gcd1(a: &Poly1, b: &Poly1) -> Poly1 {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !is_zero1(&y) {
        let (_, r) = divrem1(&x, &y);
        x = y;
        y = r;
    }
    monic1(&x)
}

fn to_upoly(p: &MultiPoly) -> UPoly {
    let du = p.degree_u() as usize;
    let mut out: UPoly = vec![Vec::new(); du + 1];
    for ((a, b), v) in p.terms() {
        let slot = &mut out[*a as usize];
        let b = *b as usize;
        if slot.len() <= b {
            slot.resize(b + 1, BigRational::zero());
        }
        slot[b] = v.clone();
    }
    out
}

fn from_upoly(p: &UPoly) -> MultiPoly {
    MultiPoly::from_terms(p.iter().enumerate().flat_map(|(a, coeffs)| {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(b, v)| ((a as u32, b as u32), v.clone()))
    }))
}

fn trim_u(p: &mut UPoly) {
    while p.last().map(is_zero1).unwrap_or(false) {
        p.pop();
    }
}

fn content_u(p: &UPoly) -> Poly1 {
    let mut g: Poly1 = Vec::new();
    for coeff in p {
        if is_zero1(coeff) {
            continue;
        }
        g = if g.is_empty() { monic1(coeff) } else { gcd1(&g, coeff) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn primitive_u(p: &UPoly) -> UPoly {
    let g = content_u(p);
    if g.len() <= 1 {
        return p.clone();
    }
    p.iter()
        .map(|coeff| {
            let (q, r) = divrem1(coeff, &g);
            debug_assert!(r.is_empty());
            q
        })
        .collect()
}

/// Sparse pseudo-remainder of `a` by `b` in `Q[c][u]`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    trim_u(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: UPoly = r.iter().map(|x| mul1(x, lb)).collect();
        for (i, y) in b.iter().enumerate() {
            let t = mul1(&lr, y);
            next[i + shift] = sub1(&next[i + shift], &t);
        }
        trim_u(&mut next);
        r = next;
    }
    r
}

/// Monic gcd of two polynomials in `Q[u, c]` (lex order, `u` major).
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    let (a, b) = (a.shift_down(ma), b.shift_down(mb));
    if a.is_constant() || b.is_constant() {
        return MultiPoly::monomial(mono, BigRational::one());
    }
    let (ua, ub) = (to_upoly(&a), to_upoly(&b));
    let cont = gcd1(&content_u(&ua), &content_u(&ub));
    let (mut x, mut y) = (primitive_u(&ua), primitive_u(&ub));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_u(&r) };
    }
    // y is either zero (x is the gcd) or a nonzero u-constant (gcd is 1)
    let core: UPoly = if y.is_empty() { x } else { vec![vec![BigRational::one()]] };
    let core = from_upoly(&primitive_u(&core));
    let content = from_upoly(&vec![cont]);
    core.mul(&content).shift_up(mono).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[((u32, u32), i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            terms
                .iter()
                .map(|(e, v)| (*e, BigRational::from_integer(BigInt::from(*v)))),
        )
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[((1, 0), 1), ((0, 1), 1)]); // u + c
        let g = p(&[((2, 0), 1), ((0, 0), 1)]); // u^2 + 1
        let h = p(&[((1, 1), 2), ((0, 0), -3)]); // 2uc - 3
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(gcd(&a, &b), f.monic());
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn gcd_with_monomials_and_content() {
        let a = p(&[((3, 2), 4), ((1, 3), 2)]); // 2uc^2(2u^2 + c)
        let b = p(&[((2, 1), 6)]);
        assert_eq!(gcd(&a, &b), p(&[((1, 1), 1)]));
        let c1 = p(&[((0, 1), 1), ((0, 0), 1)]); // c + 1
        let x = c1.mul(&p(&[((4, 0), 1), ((0, 0), -1)]));
        let y = c1.mul(&c1).mul(&p(&[((2, 0), 1), ((0, 0), 1)]));
        // gcd = (c + 1)(u^2 + 1)
        assert_eq!(gcd(&x, &y), c1.mul(&p(&[((2, 0), 1), ((0, 0), 1)])).monic());
    }
}
