// Cartan's formula L_x = ι_x d + d ι_x on both algebras.

use qcartan::algebra::{ClElement, ExtElement, LABELS};
use qcartan::differential::DifferentialSpace;
use qcartan::qcl::ClAlgebra;
use qcartan::qext::ExtAlgebra;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let ext = ExtAlgebra::new(p.clone()).unwrap();
    let cl = ClAlgebra::new(p).unwrap();
    for l in 0..3u8 {
        let name = LABELS[l as usize + 1];
        println!("∧: L_{name} - (ι d + d ι) = 0: {}", ext.cartan_defect(l).unwrap().is_zero());
        println!("Cl: L_{name} - (ι d + d ι) = 0: {}", cl.cartan_defect(l).unwrap().is_zero());
    }
    assert!(ext.satisfies_cartan().unwrap() && cl.satisfies_cartan().unwrap());

    let vm2 = ClElement::generator(2);
    let iota = cl.contraction_matrix(0).unwrap();
    let via_cartan = cl.apply(&iota, &cl.d_cl(&vm2)).add(&cl.d_cl(&cl.apply(&iota, &vm2)));
    println!("ι_v2 d vm2 + d ι_v2 vm2 = {via_cartan}");
    assert_eq!(via_cartan, ClElement::generator(1));
    let l = ext.lie_derivative_of_letter(0);
    println!("L_v2 vm2 in ∧ = {}", ext.apply(&l, &ExtElement::generator(2)));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
