// The moment maps α_q and β_q, and Lie derivatives computed three ways.

use qcartan::qcl::ClAlgebra;
use qcartan::scalar::{Params, Scalar};
use qcartan::uq::{slq_basis, Generator, SlqElement};

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let cl = ClAlgebra::new(p.clone()).unwrap();
    for g in Generator::ALL {
        println!("α_q({g}) = {}", cl.alpha_generator(g));
    }
    for (name, defect) in cl.alpha_relation_defects() {
        println!("relation {name}: defect {defect}");
        assert!(defect.is_zero());
    }
    let [_, z, y] = slq_basis(&p);
    println!("α_q(Z) = {}", cl.alpha(&z));
    println!("α_q(Y) = {}", cl.alpha(&y));

    for (x, name) in SlqElement::<Scalar>::basis().iter().zip(["X", "Z", "Y"]) {
        println!("β_q({name}) = {}", cl.beta(x));
        println!("μ({name}) = {}", cl.moment(x));
        let l = cl.lie_derivative(x).expect("the three routes agree");
        println!("L_{name} has {} nonzero entries", l.nonzero_count());
    }

    for c in cl.factor_constants().unwrap() {
        println!("{}: solved {}, closed form {}, agrees {}", c.name, c.solved, c.displayed, c.agrees());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
