// Cl_q as span{1, γ_q} times the image of α_q.

use qcartan::algebra::ClElement;
use qcartan::qcl::ClAlgebra;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let cl = ClAlgebra::new(Params::<Scalar>::symbolic()).unwrap();
    let rho = cl.rho_decomposition().unwrap();
    println!("dim of α_q on PBW words of length ≤ n: {:?}", rho.span_dims);
    println!("im α_q has dimension {}", rho.alpha_image.len());
    for v in &rho.alpha_image {
        println!("  {}", ClElement::from_coeffs(v.clone()));
    }
    println!("rank of span{{1, γ}} ⊗ im α_q -> Cl_q: {}", rho.rank);
    println!("γ^2 = {}", rho.gamma_square);
    println!("ι_x γ in im α_q: {}", rho.iota_gamma_in_image);
    let dual = &rho.dual_constant;
    println!("ι_x γ · γ* = λ x with λ = {} (closed form {})", dual.solved, dual.displayed);
    assert_eq!(rho.rank, 8);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
