// Arithmetic in Q(u, c) with q = u^2: q-integers, canonical forms, specialisation.

use num_rational::BigRational;
use qcartan::scalar::{Field, Params, Scalar};

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    for n in 1..=4 {
        println!("[{n}]_q = {}", p.q_int(n));
    }
    let x: Scalar = "(q^4-1)/(q^2-1)".parse().unwrap();
    println!("(q^4-1)/(q^2-1) = {x}");
    assert_eq!(x, "q^2+1".parse().unwrap());

    let gamma_sq: Scalar = "(1+q^2)/(4*c*q)".parse().unwrap();
    println!("γ^2 = {gamma_sq}");

    let sqrt_q = p.q_pow_half(1).unwrap();
    println!("q^(1/2) = {sqrt_q}, squared {}", sqrt_q.mul(&sqrt_q));

    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let at = gamma_sq.specialize(&r(7, 5), &r(1, 1)).unwrap();
    println!("γ^2 at q = 7/5, c = 1: {at}");
    assert_eq!(at, r(37, 70));

    let point = Params::at(r(9, 4), r(2, 1)).unwrap();
    println!("q^(1/2) at q = 9/4: {}", point.q_pow_half(1).unwrap());
    assert!(Params::at(r(1, 1), r(1, 1)).is_err());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
