// The R-matrix braiding σ, its inverse, and the normalised braiding σ̃.

use qcartan::braiding::{select_convention, sigma, sigma_inv, sigma_tilde, yang_baxter_holds, PINNED};
use qcartan::linalg::Matrix;
use qcartan::repn::ModuleSpec;
use qcartan::scalar::{Params, Scalar};

const NAMES: [&str; 3] = ["v2", "v0", "vm2"];

fn show(label: &str, image: &[Scalar]) {
    let terms: Vec<String> = image
        .iter()
        .enumerate()
        .filter(|(_, k)| !qcartan::scalar::Field::is_zero(*k))
        .map(|(i, k)| format!("({k}) {}⊗{}", NAMES[i / 3], NAMES[i % 3]))
        .collect();
    println!("{label}(v0⊗v2) = {}", terms.join(" + "));
}

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let v = ModuleSpec::v2pi(&p).unwrap();
    println!("convention: {:?}", select_convention(&p).unwrap());
    assert_eq!(select_convention(&p).unwrap(), PINNED);

    let s = sigma(&v, &v, &p).unwrap();
    let si = sigma_inv(&v, &v, &p).unwrap();
    let st = sigma_tilde(&v, &v, &p).unwrap();
    show("σ", &s.image_of(1, 0));
    show("σ^-1", &si.image_of(1, 0));
    show("σ̃", &st.image_of(1, 0));

    assert!(st.matrix.mul(&st.matrix) == Matrix::identity(9));
    assert!(si.matrix.mul(&s.matrix) == Matrix::identity(9));
    println!("σ̃^2 = id, σ^-1 σ = id");
    println!("Yang-Baxter on V⊗V⊗V: {}", yang_baxter_holds(&v, &p).unwrap());
    println!("σ̃ equivariant: {}", st.is_equivariant(&v, &v));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
