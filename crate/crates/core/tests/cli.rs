use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperloci")).args(args).env_remove("HYPERLOCI_BUDGET").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn assert_schema(schema_file: &str, text: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(schema_file);
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance: serde_json::Value = serde_json::from_str(text).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:?}");
}

#[test]
fn classify_outputs() {
    let json = stdout(&["classify", "--genus", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 12);
    for g in ["2", "3", "10", "29"] {
        assert_schema("locus-rows.schema.json", &stdout(&["classify", "--genus", g, "--format", "json"]));
    }
    let md = stdout(&["classify", "--genus", "2"]);
    assert!(md.starts_with("| # | G |"));
    assert_eq!(md.lines().count(), 7 + 2);
    assert_eq!(code(&["classify", "--genus", "1"]), 2);
    assert_eq!(code(&["classify", "--genus", "3", "--format", "dot"]), 2);
}

#[test]
fn equation_outputs() {
    let out = stdout(&["equation", "--genus", "2", "--case", "1", "--n", "2"]);
    assert!(out.contains("y^2 = (x^2 - l1)*(x^2 - l2)*(x^2 - l3)\n"));
    assert!(out.contains("y^2 = x^6 + l1*x^4 + l2*x^2 + 1\n"));
    let bad = run(&["equation", "--genus", "4", "--case", "13"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not an integer"));
    let spec = stdout(&["equation", "--genus", "5", "--case", "10", "--specialize", "7"]);
    let last = spec.lines().last().unwrap();
    assert!(last.starts_with("y^2 = x^12 - 7*x^10"));
    assert_eq!(code(&["equation", "--genus", "5", "--case", "10", "--specialize", "7,8"]), 2);
    assert_eq!(code(&["equation", "--genus", "5", "--case", "32"]), 2);
    assert_eq!(code(&["equation", "--genus", "5", "--case", "1"]), 3);
    let expanded = stdout(&["equation", "--genus", "3", "--case", "4", "--n", "2", "--expand"]);
    assert!(expanded.lines().count() >= 3);
    assert!(stdout(&["equation", "--genus", "3", "--case", "0"]).contains("y^2 = x*(x - 1)*(x^5"));
}

#[test]
fn verification_is_deterministic() {
    let args = ["equation", "--genus", "7", "--case", "11", "--verify", "10", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("verified: 10 trials"));
}

#[test]
fn lattice_outputs() {
    let dot = stdout(&["lattice", "--genus", "4"]);
    assert!(dot.contains("\"Z4\" -> \"G2\";"));
    assert_eq!(dot, stdout(&["lattice", "--genus", "4", "--format", "dot"]));
    let csv = stdout(&["lattice", "--genus", "4", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 13);
    assert!(csv.lines().all(|l| l.split(',').count() == 13));
    assert_schema("lattice.schema.json", &stdout(&["lattice", "--genus", "6", "--format", "json"]));
    assert_eq!(code(&["lattice", "--genus", "50"]), 2);
    assert_eq!(code(&["lattice", "--genus", "4", "--format", "markdown"]), 2);
    assert_eq!(code(&["--budget", "0", "lattice", "--genus", "4", "--strict"]), 4);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperloci"))
        .args(["lattice", "--genus", "4", "--strict"])
        .env("HYPERLOCI_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn fixedfield_and_count() {
    let d3 = stdout(&["fixedfield", "--group", "D", "--n", "3"]);
    assert!(d3.contains("moebius-equivalent: yes"));
    assert!(d3.contains("branch points: "));
    for p in ["-2", "2", "infinity"] {
        assert!(d3.lines().any(|l| l.starts_with(&format!("  over {p}:"))), "{p}");
    }
    let a5 = stdout(&["fixedfield", "--group", "A5"]);
    assert!(a5.contains("order 60"));
    for p in ["0", "1728", "infinity"] {
        assert!(a5.lines().any(|l| l.starts_with(&format!("  over {p}:"))), "{p}");
    }
    assert_eq!(code(&["fixedfield", "--group", "Q"]), 2);
    assert_eq!(code(&["fixedfield", "--group", "Z"]), 2);
    let count = stdout(&["count", "--genus", "4"]);
    assert!(count.contains("| Z | 8 | 5 |"));
    assert!(count.contains("not expected to agree"));
    assert_schema("count.schema.json", &stdout(&["count", "--genus", "9", "--format", "json"]));
}
