// The q-deformed Clifford algebra: relations, the cubic element γ_q, and d_Cl.

use qcartan::algebra::{ClElement, LABELS};
use qcartan::expr::parse;
use qcartan::qcl::ClAlgebra;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let cl = ClAlgebra::new(Params::<Scalar>::symbolic()).unwrap();
    for text in ["vm2*v2", "v0*v0", "v0*v2", "v2*v0*vm2*v2"] {
        println!("{text} = {}", cl.eval(&parse(text).unwrap(), None).unwrap());
    }
    println!("⟨,⟩ on (v2, v0, vm2):\n{}", cl.bilinear_form().matrix());

    let g = cl.gamma();
    println!("γ = {g}");
    println!("γ^2 = {}", cl.mul(&g, &g));
    println!("γ invariant: {}", cl.is_invariant(&g));

    for l in 0..3u8 {
        println!("d {} = {}", LABELS[l as usize + 1], cl.d_cl(&ClElement::generator(l)));
    }
    let d = cl.d_cl_matrix();
    assert!(d.mul(&d).is_zero());
    println!("d_Cl d_Cl = 0");
    let gamma = cl.eval(&parse("gamma*v2 + v2*gamma").unwrap(), Some(&g)).unwrap();
    println!("γ v2 + v2 γ = {gamma}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
