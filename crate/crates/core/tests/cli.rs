use std::process::{Command, Output};

use monoext::cli::load_monoid;
use monoext::monoid::monoid_from_json;
use serde_json::{json, Value};

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (Value, i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monoext"));
    cmd.current_dir(env!("CARGO_MANIFEST_DIR")).args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { status, stdout, stderr } = cmd.output().expect("binary runs");
    let v: Value = serde_json::from_slice(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&stderr)));
    (v, status.code().unwrap(), stdout)
}

fn run(args: &[&str]) -> (Value, i32) {
    let (v, code, _) = run_env(args, &[]);
    (v, code)
}

#[test]
fn t3_sign_in_degree_two() {
    let (v, code) = run(&[
        "ext", "--method", "topological", "--monoid", "fixtures/t3.json", "--V", "trivial", "--e", "0", "--W", "fixtures/sign_s3.json", "--field", "q",
        "--degrees", "0..3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["dims"], json!({"0": 0, "1": 0, "2": 1, "3": 0}));
    assert_eq!(v["method"], "topological");
}

#[test]
fn aff_2_2_global_dimension() {
    let (v, code) = run(&["gldim-bound", "--monoid", "fixtures/aff_2_2.json", "--field", "q"]);
    assert_eq!(code, 0);
    assert_eq!((v["applicable"].clone(), v["bound"].clone()), (json!(true), json!(2)));
}

#[test]
fn t3_singular_part_is_a_hexagon() {
    let (v, code) = run(&["homology", "--poset", "omega-singular", "--monoid", "fixtures/t3.json", "--field", "q"]);
    assert_eq!(code, 0);
    assert_eq!(v["reduced_dims"], json!({"0": 0, "1": 1}));
}

#[test]
fn build_round_trips() {
    let inline = r#"{"type":"transformations","degree":3,"generators":[[1,2,0],[0,0,2]]}"#;
    for arg in ["t3", "aff(1,3)", "band6", "fixtures/m_2_2.json", "fixtures/aff_1_3.json", inline] {
        let (v, code) = run(&["build", "--monoid", arg]);
        assert_eq!(code, 0, "{arg}");
        let parsed = monoid_from_json(&v).unwrap();
        assert_eq!(&parsed, load_monoid(arg).unwrap().monoid.as_ref(), "{arg}");
        // The output is itself a valid monoid argument.
        let again = run(&["build", "--monoid", &v.to_string()]).0;
        assert_eq!(again["table"], v["table"], "{arg}");
    }
}

#[test]
fn reports_are_byte_stable() {
    let cases: &[&[&str]] = &[
        &["green", "--monoid", "t3"],
        &["ext", "--method", "oracle", "--monoid", "aff(1,3)", "--W", "trivial", "--degrees", "0..2"],
        &["resolution", "--monoid", "aff(1,3)"],
        &["sandwich", "--monoid", "m(2,2)", "--j", "2"],
        &["homology", "--poset", "omega-singular", "--monoid", "t4", "--W", "trivial,sign,standard"],
    ];
    for args in cases {
        let (_, _, a) = run_env(args, &[]);
        let (_, _, b) = run_env(args, &[]);
        let (_, _, c) = run_env(args, &[("MONOEXT_THREADS", "1")]);
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a, c, "{args:?}");
    }
}

#[test]
fn every_report_records_version_and_assumptions() {
    let cases: &[&[&str]] = &[
        &["build", "--monoid", "t2"],
        &["green", "--monoid", "t2"],
        &["flags", "--monoid", "nil3"],
        &["sandwich", "--monoid", "t3", "--j", "1"],
        &["gcompletion", "--monoid", "z3"],
        &["poset", "--monoid", "t3", "--poset", "omega-singular"],
        &["homology", "--monoid", "aff(1,3)", "--poset", "omega-singular", "--complex", "nerve", "--degrees", "0..1"],
        &["ext", "--method", "ext1", "--monoid", "aff(1,2)"],
        &["ext", "--method", "induced", "--monoid", "t2", "--degrees", "0..1"],
        &["cohomology", "--monoid", "semilattice2"],
        &["tor", "--monoid", "z2", "--x", "universe", "--y", "point"],
        &["homepi", "--monoid", "aff(1,2)", "--phi", "linear"],
        &["gldim-bound", "--monoid", "aff(1,2)"],
        &["resolution", "--monoid", "semilattice2", "--V", "trivial"],
        &["simples", "--monoid", "aff(1,3)"],
    ];
    for args in cases {
        let (v, code) = run(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert_eq!(v["tool_version"], monoext::cli::VERSION, "{args:?}");
        assert!(v["assumptions_checked"].is_object(), "{args:?}");
    }
}

#[test]
fn exit_codes_and_error_reports() {
    // Hypotheses fail: not regular.
    let (v, code) = run(&["gldim-bound", "--monoid", "nil3"]);
    assert_eq!(code, 2);
    assert_eq!(v["applicable"], false);
    // Bad characteristic for the topological formula.
    let (v, code) = run(&["ext", "--monoid", "t3", "--field", "p:2", "--W", "trivial"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "bad_characteristic");
    assert!(v["tool_version"].is_string());
    // Malformed input.
    let (v, code) = run(&["build", "--monoid", r#"{"size":2,"identity":0,"table":[[0,1],[1,2]]}"#]);
    assert_eq!(code, 1);
    assert!(v["error"]["code"].is_string());
    let (v, code) = run(&["green", "--monoid", "no-such-monoid"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "invalid_input");
    // Cap exceeded is an error, not a silent truncation.
    let (v, code) = run(&["ext", "--method", "oracle", "--monoid", "t3", "--degrees", "0..3", "--cap", "1000"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "cap_exceeded");
    // A non-prime characteristic.
    let (v, code) = run(&["homology", "--monoid", "t3", "--poset", "omega-singular", "--field", "p:4"]);
    assert_ne!(code, 0);
    assert!(v["error"]["code"].is_string());
}

#[test]
fn out_flag_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("monoext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("green.json");
    let (_, _, stdout) = run_env(&["green", "--monoid", "t3"], &[]);
    let status = Command::new(env!("CARGO_BIN_EXE_monoext"))
        .args(["green", "--monoid", "t3", "--out", path.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
