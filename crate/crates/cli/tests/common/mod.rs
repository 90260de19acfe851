#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// (golden file stem, arguments, expected exit code)
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("invariants_t333", &["invariants", "--poly", "x^3+y^3+z^3+x*y*z", "--vars", "x,y,z"], 0),
    ("invariants_t442", &["invariants", "--poly", "x^4+y^4+z^2+x*y*z"], 0),
    ("invariants_t632", &["invariants", "--poly", "x^6+y^3+z^2+x*y*z"], 0),
    ("invariants_a1", &["invariants", "--poly", "x^2+y^2+z^2"], 0),
    ("invariants_a4", &["invariants", "--poly", "x^5+y^2+z^2", "--vars", "x,y,z"], 0),
    ("invariants_d4", &["invariants", "--poly", "x^2*y+y^3+z^2"], 0),
    ("invariants_e6", &["invariants", "--poly", "x^3+y^4+z^2"], 0),
    ("invariants_fermat_3_2", &["invariants", "--poly", "x^3+y^3", "--vars", "x,y"], 0),
    ("invariants_fermat_4_3", &["invariants", "--poly", "x^4+y^4+z^4"], 0),
    ("invariants_t433", &["invariants", "--poly", "x^4+y^3+z^3+x*y*z"], 0),
    ("invariants_t642", &["invariants", "--poly", "x^6+y^4+z^2+x*y*z"], 0),
    ("invariants_nonisolated", &["invariants", "--poly", "x^2*y", "--vars", "x,y"], 2),
    ("scan_tpqr333", &["scan", "--family", "tpqr:3,3,3", "--param", "lambda=0,1,2,-3"], 0),
    ("scan_tpqr333_catalog", &["scan", "--family", "tpqr:3,3,3", "--param", "lambda=0,1,5"], 0),
    ("scan_tpqr442", &["scan", "--family", "tpqr:4,4,2", "--param", "lambda=1,2"], 0),
    ("scan_tpqr632", &["scan", "--family", "tpqr:6,3,2", "--param", "lambda=1,2"], 0),
    (
        "scan_example7",
        &["scan", "--family", "example7-martin", "--param", "t=1,1/4,0", "--zero", "s1..s6"],
        0,
    ),
    ("scan_example8", &["scan", "--family", "example8-icis", "--param", "s=1"], 0),
    ("scan_example8_generic", &["scan", "--family", "example8-icis", "--param", "s=2,3,1/2"], 0),
    (
        "projective_fermat_quartic",
        &["projective", "--poly", "x^4+y^4+z^4+w^4", "--vars", "x,y,z,w"],
        0,
    ),
    (
        "projective_fermat_cubic",
        &["projective", "--poly", "x^3+y^3+z^3+w^3", "--vars", "x,y,z,w"],
        0,
    ),
    (
        "oracle_t333",
        &["oracle-dim", "--poly", "x^3+y^3+z^3+x*y*z", "--degree-bound", "4", "--ideal", "tjurina"],
        0,
    ),
];

pub fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_modstrat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

pub fn run_json(args: &[&str]) -> (String, i32) {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--format", "json"]);
    let (stdout, _, code) = run(&full);
    (stdout, code)
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn schema() -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}
