//! The `k2ws` binary: exit codes, JSON shape and determinism.

use std::process::{Command, Output};

fn k2ws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k2ws"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    k2ws(args).status.code().unwrap()
}

#[test]
fn decided_commands_exit_zero() {
    assert_eq!(code(&["gb", "examples/jobs/skew_cubic.k2"]), 0);
    assert_eq!(code(&["gr", "examples/jobs/skew_cubic.k2"]), 0);
    assert_eq!(code(&["essential", "examples/jobs/hilbert_series.k2"]), 0);
    assert_eq!(code(&["k2", "examples/jobs/monomial_resolution.k2"]), 0);
    assert_eq!(code(&["face", "examples/jobs/grassmann3.face"]), 0);
    assert_eq!(code(&["face", "examples/jobs/six_vertex.face", "--search-orderings"]), 0);
}

#[test]
fn evidence_is_inconclusive() {
    assert_eq!(code(&["k2", "examples/jobs/skew_cubic.k2", "--bound", "6"]), 2);
    assert_eq!(code(&["lift", "examples/jobs/augmented.k2"]), 2);
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(code(&["nonsense", "examples/jobs/skew_cubic.k2"]), 1);
    assert_eq!(code(&["gb", "examples/jobs/does_not_exist.k2"]), 1);
    assert_eq!(code(&["gb", "examples/jobs/skew_cubic.k2", "--field", "GF(10)"]), 1);
    let dir = std::env::temp_dir().join(format!("k2ws-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.k2");
    std::fs::write(&bad, "vars x y\nrel x*y - z\n").unwrap();
    let out = k2ws(&["gb", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("2:") && err.contains('z'), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_has_the_report_keys() {
    let out = k2ws(&["essential", "examples/jobs/hilbert_series.k2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["command", "input_hash", "verdict", "tables", "caveats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "essential");
    assert_eq!(v["verdict"]["status"], "decided");
    assert_eq!(v["input_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        ["ext", "examples/jobs/monomial_resolution.k2", "--json"],
        ["k2", "examples/jobs/hilbert_series.k2", "--json"],
        ["face", "examples/jobs/grassmann3.face", "--json"],
    ] {
        let a = k2ws(&args).stdout;
        let b = k2ws(&args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn field_flag_overrides_the_file() {
    let out = k2ws(&["gb", "examples/jobs/skew_cubic.k2", "--field", "QQ", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"]["field"], "QQ");
}
