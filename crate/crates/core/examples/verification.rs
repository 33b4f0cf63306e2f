// Running the identity suites and reading the report.

use qcartan::verify::{verify, Mode, Status, Suite};

pub fn run_example() {
    let report = verify(Suite::Ext, &Mode::Symbolic).unwrap();
    println!("{report}\n");
    for failure in report.failures() {
        println!("failed: {} ({} vs {})", failure.id, failure.lhs, failure.rhs);
    }

    for mode in Mode::default_points() {
        let report = verify(Suite::Cl, &mode).unwrap();
        let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
        println!("cl at {:?}: {passed}/{}", report.configuration, report.checks.len());
        assert!(report.all_passed());
    }

    let report = verify(Suite::Scalar, &Mode::at("3/2", "q").unwrap()).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    assert!(Mode::at("1", "1").is_err());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
