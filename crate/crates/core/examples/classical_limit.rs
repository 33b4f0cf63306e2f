// Specialising symbolic results at q = 1, c = 1.

use num_rational::BigRational;
use qcartan::algebra::ClElement;
use qcartan::braiding::{flip, sigma_tilde};
use qcartan::qcl::ClAlgebra;
use qcartan::repn::ModuleSpec;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let one = BigRational::from_integer(1.into());
    let at_one = |s: &Scalar| s.specialize(&one, &one);

    let cl = ClAlgebra::new(p.clone()).unwrap();
    for a in 0..3u8 {
        for b in a..3u8 {
            let (x, y) = (ClElement::generator(a), ClElement::generator(b));
            let anti = cl.mul(&x, &y).add(&cl.mul(&y, &x)).try_map(at_one).unwrap();
            println!("{x} {y} + {y} {x} = {anti} at q = 1");
        }
    }

    let v = ModuleSpec::v2pi(&p).unwrap();
    let st = sigma_tilde(&v, &v, &p).unwrap().matrix.try_map(at_one).unwrap();
    println!("σ̃ on V⊗V at q = 1 is the flip: {}", st == flip(3, 3));
    let st = cl.sigma_tilde_self().unwrap().matrix.try_map(at_one).unwrap();
    println!("σ̃ on Cl⊗Cl at q = 1 is the flip: {}", st == flip(8, 8));
    println!("γ at q = 1, c = 1: {}", cl.gamma().try_map(at_one).unwrap());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
