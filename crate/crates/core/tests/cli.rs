use std::process::Command;

fn qcartan(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcartan")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn normalize_prints_canonical_form() {
    let (code, out, _) = qcartan(&["normalize", "--algebra", "cl", "vm2*v2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "-v2*vm2 + (q^2+1)/q^2 * c");
    let (_, out, _) = qcartan(&["normalize", "--algebra", "ext", "v0*v0"]);
    assert_eq!(out.trim(), "(1-q^4)/q^3 * v2*vm2");
    let (_, out, _) = qcartan(&["normalize", "1"]);
    assert_eq!(out.trim(), "1");
}

#[test]
fn normalize_reports_syntax_errors() {
    let (code, _, err) = qcartan(&["normalize", "v2**"]);
    assert_ne!(code, 0);
    assert!(err.contains("position"), "{err}");
}

#[test]
fn verify_exit_code_tracks_failures() {
    let (code, out, _) = qcartan(&["verify", "--suite", "cl", "--q", "7/5", "--c", "1"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = qcartan(&["verify", "--suite", "ext", "--q", "3/2", "--c", "q"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  ext.contraction_top_pairing"));
}

#[test]
fn verify_rejects_excluded_points() {
    for q in ["1", "-1", "0"] {
        let (code, _, err) = qcartan(&["verify", "--suite", "braiding", "--q", q]);
        assert_eq!(code, 2, "{err}");
    }
    let (code, _, _) = qcartan(&["verify", "--q", "2", "--c", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_writes_json_report() {
    let path = std::env::temp_dir().join(format!("qcartan-report-{}.json", std::process::id()));
    let (code, _, _) = qcartan(&["verify", "--suite", "scalar", "--q", "7/5", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report["suite"], "scalar");
    assert_eq!(report["configuration"]["mode"], "at");
    assert_eq!(report["configuration"]["q"], "7/5");
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        for field in ["id", "status", "lhs", "rhs", "anchor"] {
            assert!(c.get(field).is_some(), "{field}");
        }
        assert_eq!(c["status"], "pass");
    }
    assert!(report["timing"]["total_ms"].is_number());
}

#[test]
fn matrix_command() {
    let (code, out, _) = qcartan(&["matrix", "sigma-tilde", "V2pi", "V2pi"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("9x9"));
    assert!(out.contains("2*q^2/(q^4+1)"));
    let (_, out, _) = qcartan(&["matrix", "L(K)", "cl"]);
    assert!(out.starts_with("8x8"));
    let (_, out, _) = qcartan(&["matrix", "iota(v0)", "ext", "--q", "2", "--c", "3"]);
    assert!(out.starts_with("8x8"));
    let (code, _, err) = qcartan(&["matrix", "tau"]);
    assert_ne!(code, 0);
    assert!(err.contains("unknown object"));
}

#[test]
fn cohomology_command() {
    let (_, out, _) = qcartan(&["cohomology", "--algebra", "ext"]);
    assert!(out.contains("[1, 0, 0, 1]"));
    assert!(out.contains("v2*v0*vm2"));
    let (_, out, _) = qcartan(&["cohomology", "--algebra", "cl", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cycles"], 4);
    assert_eq!(v["boundaries"], 4);
    let (_, out, _) = qcartan(&["cohomology", "--algebra", "ext", "--q", "1", "--c", "1"]);
    assert!(out.contains("[1, 0, 0, 1]"));
}
