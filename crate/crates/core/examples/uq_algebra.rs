// U_q(sl2) on its PBW basis: normal forms, Hopf structure, adjoint matrices.

use qcartan::scalar::{Params, Scalar};
use qcartan::uq::{adjoint, adjoint_matrix, slq_basis, Generator, UqWord};

pub fn run_example() {
    use Generator::*;
    let p = Params::<Scalar>::symbolic();
    let ef = UqWord::from_word(&[E, F], &p);
    println!("E F = {ef}");
    let ke = UqWord::from_word(&[K, E, KInv], &p);
    println!("K E K^-1 = {ke}");

    let e = UqWord::<Scalar>::generator(E);
    for (a, b) in e.coproduct(&p) {
        println!("Δ(E) ∋ {a} ⊗ {b}");
    }
    println!("S(E) = {}", e.antipode(&p));

    let [x, z, y] = slq_basis(&p);
    println!("X = {x}\nZ = {z}\nY = {y}");
    println!("ad_E Y = {}", adjoint(E, &y, &p));
    for g in Generator::ALL {
        println!("ad_{g} on (X, Z, Y):\n{}", adjoint_matrix(g, &p).unwrap());
    }
    assert!(adjoint(E, &x, &p).is_zero());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
