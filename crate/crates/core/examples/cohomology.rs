// Cohomology of d_∧ and d_Cl, symbolically and at the classical point.

use num_rational::BigRational;
use qcartan::commands::{cohomology_summary, AlgebraName};

pub fn run_example() {
    let ext = cohomology_summary(AlgebraName::Ext, None).unwrap();
    println!("H(∧_q, d):\n{ext}\n");
    assert_eq!(ext.betti, vec![1, 0, 0, 1]);

    let cl = cohomology_summary(AlgebraName::Cl, None).unwrap();
    println!("H(Cl_q, d):\n{cl}\n");
    assert_eq!((cl.cycles, cl.boundaries), (4, 4));

    let one = BigRational::from_integer(1.into());
    let classical = cohomology_summary(AlgebraName::Ext, Some((&one, &one))).unwrap();
    println!("H(∧, d) at q = 1, c = 1:\n{classical}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
