//! Every example runs to completion.

mod braiding {
    include!("../examples/braiding.rs");
}

#[test]
fn braiding_example() {
    braiding::run_example();
}

mod cartan_formula {
    include!("../examples/cartan_formula.rs");
}

#[test]
fn cartan_formula_example() {
    cartan_formula::run_example();
}

mod classical_limit {
    include!("../examples/classical_limit.rs");
}

#[test]
fn classical_limit_example() {
    classical_limit::run_example();
}

mod clifford_algebra {
    include!("../examples/clifford_algebra.rs");
}

#[test]
fn clifford_algebra_example() {
    clifford_algebra::run_example();
}

mod cohomology {
    include!("../examples/cohomology.rs");
}

#[test]
fn cohomology_example() {
    cohomology::run_example();
}

mod contractions {
    include!("../examples/contractions.rs");
}

#[test]
fn contractions_example() {
    contractions::run_example();
}

mod expressions {
    include!("../examples/expressions.rs");
}

#[test]
fn expressions_example() {
    expressions::run_example();
}

mod exterior_algebra {
    include!("../examples/exterior_algebra.rs");
}

#[test]
fn exterior_algebra_example() {
    exterior_algebra::run_example();
}

mod leibniz {
    include!("../examples/leibniz.rs");
}

#[test]
fn leibniz_example() {
    leibniz::run_example();
}

mod modules {
    include!("../examples/modules.rs");
}

#[test]
fn modules_example() {
    modules::run_example();
}

mod moment_maps {
    include!("../examples/moment_maps.rs");
}

#[test]
fn moment_maps_example() {
    moment_maps::run_example();
}

mod rho_decomposition {
    include!("../examples/rho_decomposition.rs");
}

#[test]
fn rho_decomposition_example() {
    rho_decomposition::run_example();
}

mod scalars {
    include!("../examples/scalars.rs");
}

#[test]
fn scalars_example() {
    scalars::run_example();
}

mod uq_algebra {
    include!("../examples/uq_algebra.rs");
}

#[test]
fn uq_algebra_example() {
    uq_algebra::run_example();
}

mod verification {
    include!("../examples/verification.rs");
}

#[test]
fn verification_example() {
    verification::run_example();
}
