use std::path::PathBuf;
use std::process::{Command, Output};

fn hyperval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperval")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Compares stdout with the golden file; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) {
    let out = hyperval(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&expected), "{name}");
}

#[test]
fn scenario_goldens() {
    for s in ["example-last", "kgamma", "no-kraval", "tropical-not-krasner", "coarsening-theorem"] {
        check_golden(&format!("scenario-{s}"), &["scenario", s]);
    }
}

#[test]
fn table_goldens() {
    check_golden("axioms-K", &["axioms", "builtin:K"]);
    check_golden("classify-W", &["classify", "builtin:W"]);
}

#[test]
fn quotient_then_iso() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let path = out.to_str().unwrap();
    assert!(hyperval(&["quotient", "--field", "7", "--subgroup", "squares", "--output", path]).status.success());
    assert_eq!(hyperval(&["iso", path, "builtin:W"]).status.code(), Some(0));
    assert_eq!(hyperval(&["iso", path, "builtin:S"]).status.code(), Some(1));
    assert_eq!(hyperval(&["axioms", path]).status.code(), Some(0));
}

#[test]
fn quotient_to_stdout() {
    let out = hyperval(&["quotient", "--field", "5", "--subgroup", "all"]);
    assert!(out.status.success());
    let table: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table["size"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(hyperval(&["axioms", "builtin:W"]).status.code(), Some(0));
    assert_eq!(hyperval(&["axioms", "builtin:Q"]).status.code(), Some(2));
    assert_eq!(hyperval(&["axioms", "/nonexistent/table.json"]).status.code(), Some(2));
    assert_eq!(hyperval(&["scenario", "unknown"]).status.code(), Some(2));
    assert_eq!(hyperval(&["quotient", "--field", "6"]).status.code(), Some(2));
    assert_eq!(hyperval(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(hyperval(&["enumerate", "--order", "9"]).status.code(), Some(2));
    // Q(X) modulo the X-adic units carries no Krasner valuation.
    assert_eq!(hyperval(&["krasner", "--unit-class"]).status.code(), Some(1));
}

#[test]
fn malformed_table_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"size": 2, "names": ["0"], "mul": [], "add": []}"#).unwrap();
    assert_eq!(hyperval(&["axioms", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn axiom_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // 1 + 1 = {1} has no additive inverse for 1.
    let table = r#"{"size": 2, "names": ["0", "1"], "mul": [[0, 0], [0, 1]], "add": [[[0], [1]], [[1], [1]]]}"#;
    std::fs::write(&path, table).unwrap();
    let out = hyperval(&["axioms", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn table_format() {
    let out = hyperval(&["scenario", "kgamma", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("scenario kgamma\n"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn runs_are_deterministic() {
    for args in [&["scenario", "example-last"][..], &["enumerate", "--order", "4"], &["krasner", "--q", "2", "--gamma", "1"]] {
        assert_eq!(hyperval(args).stdout, hyperval(args).stdout, "{args:?}");
    }
}
