// Parsing expressions and rewriting them on the canonical basis.

use qcartan::commands::{AlgebraName, Workspace};
use qcartan::expr::parse;
use qcartan::scalar::{Params, Scalar};

pub fn run_example() {
    let ws = Workspace::new(Params::<Scalar>::symbolic()).unwrap();
    for (algebra, text) in [
        (AlgebraName::Cl, "vm2*v2"),
        (AlgebraName::Ext, "v0*v0"),
        (AlgebraName::Cl, "(v2 + vm2)^2"),
        (AlgebraName::Cl, "gamma^2"),
        (AlgebraName::Ext, "(1-q^4)/q^3 * v2*vm2 - v0^2"),
    ] {
        println!("[{algebra}] {text} = {}", ws.normalize(algebra, text).unwrap());
    }
    assert_eq!(ws.normalize(AlgebraName::Cl, "vm2*v2").unwrap(), "-v2*vm2 + (q^2+1)/q^2 * c");

    match parse("v2**") {
        Ok(_) => unreachable!(),
        Err(e) => println!("v2** -> {e}"),
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
