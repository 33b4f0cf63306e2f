// The quantum exterior algebra: products, the σ̃-quotient, and the differential d_∧.

use qcartan::algebra::{ExtElement, LABELS};
use qcartan::expr::parse;
use qcartan::qext::ExtAlgebra;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let ext = ExtAlgebra::new(Params::<Scalar>::symbolic()).unwrap();
    for text in ["v0*v2", "vm2*v0", "v0*v0", "vm2*v2", "v2*v2"] {
        println!("{text} = {}", ext.eval(&parse(text).unwrap(), None).unwrap());
    }
    let table = ext.ext_from_braiding().unwrap();
    println!("V⊗V / im(1 + σ̃) has dimension {}", table.quotient_dim);

    for l in 0..3u8 {
        let v = ExtElement::generator(l);
        println!("d {} = {}", LABELS[l as usize + 1], ext.d_ext(&v));
    }
    let d = ext.d_ext_matrix();
    assert!(d.mul(&d).is_zero());
    println!("d_∧ d_∧ = 0");

    let form = ext.d_ext_operator_form().unwrap();
    println!("d = a vm2 L_X + b v0 L_Z + e v2 L_Y with");
    for (i, name) in ["a", "b", "e"].iter().enumerate() {
        println!(
            "  {name} = {} (closed form {}, {})",
            form.solved[i],
            form.displayed[i],
            if form.agreement()[i] { "agrees" } else { "differs" }
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
