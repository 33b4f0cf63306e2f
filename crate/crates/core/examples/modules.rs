// The adjoint module V_2π, tensor squares, and highest-weight decompositions.

use qcartan::qcl::ClAlgebra;
use qcartan::repn::ModuleSpec;
use qcartan::scalar::{Params, Scalar};
use qcartan::uq::Generator;

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let v = ModuleSpec::v2pi(&p).unwrap();
    println!("V_2π weights {:?}", v.weights());
    println!("E on V_2π:\n{}", v.action(Generator::E));
    v.check(&p).unwrap();

    let vv = v.tensor(&v);
    let dec = vv.decompose().unwrap();
    println!("V⊗V = ⊕ V_n with n in {:?}", dec.highest_weights());
    assert_eq!(dec.highest_weights(), vec![4, 2, 0]);

    let cl = ClAlgebra::new(p.clone()).unwrap();
    let m = cl.module();
    println!("Cl_q weights {:?}", m.weights());
    println!("Cl_q = ⊕ V_n with n in {:?}", m.decompose().unwrap().highest_weights());
    println!("{} invariants in Cl_q", m.invariants().len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
