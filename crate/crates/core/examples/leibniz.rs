// Braided Leibniz rules for contractions fail on ι_v0 (v2 vm2).

use qcartan::qcl::ClAlgebra;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let cl = ClAlgebra::new(Params::<Scalar>::symbolic()).unwrap();
    let report = cl.leibniz_counterexamples().unwrap();
    println!("ι_v0 (v2 vm2) = {}", report.true_value);
    for (case, gap) in report.cases.iter().zip(report.discrepancies()) {
        println!(
            "{:?} rule gives {}, off by {} v0",
            case.braiding,
            case.value,
            gap.map_or("?".into(), |g| g.to_string())
        );
    }
    assert!(report.all_fail());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
