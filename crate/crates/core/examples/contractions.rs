// Contractions ι_x on the exterior algebra, and the braided anticommutation rule.

use qcartan::algebra::{ExtElement, DIM, LABELS, TOP};
use qcartan::braiding::sigma_tilde;
use qcartan::qext::ExtAlgebra;
use qcartan::repn::ModuleSpec;
use qcartan::scalar::{Field, Params, Scalar};

pub fn run_example() {
    let p = Params::<Scalar>::symbolic();
    let ext = ExtAlgebra::new(p.clone()).unwrap();
    for l in 0..3u8 {
        let iota = ext.contraction_matrix(l);
        for i in 1..DIM {
            let image = ext.apply(&iota, &ExtElement::basis(i));
            if !image.is_zero() {
                println!("ι_{} {} = {image}", LABELS[l as usize + 1], LABELS[i]);
            }
        }
    }
    println!("ι_top(top) = {}", ext.top_pairing());
    println!("ι_v0 ι_v2 (top) = {}", ext.contract(5, &ExtElement::basis(TOP)));

    let v = ModuleSpec::v2pi(&p).unwrap();
    let st = sigma_tilde(&v, &v, &p).unwrap();
    let iota: Vec<_> = (0..3).map(|l| ext.contraction_matrix(l)).collect();
    for x in 0..3 {
        for y in 0..3 {
            let mut total = iota[x].mul(&iota[y]);
            for (idx, k) in st.image_of(x, y).iter().enumerate() {
                if !k.is_zero() {
                    total = total.add(&iota[idx / 3].mul(&iota[idx % 3]).scale(k));
                }
            }
            assert!(total.is_zero());
        }
    }
    println!("ι_x ι_y + Σ ι_(y_i) ι_(x_i) = 0 for all generator pairs");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
