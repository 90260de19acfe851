//! Golden JSON outputs. Set `UPDATE_GOLDEN=1` to rewrite the files.

mod common;

use common::{golden_dir, run_json, CASES};

#[test]
fn json_outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args, code) in CASES {
        let (stdout, got_code) = run_json(args);
        assert_eq!(got_code, *code, "{name}: exit code");
        let path = golden_dir().join(format!("{name}.json"));
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != stdout {
            mismatches.push(name.to_string());
        }
    }
    assert!(mismatches.is_empty(), "outputs differ from golden files: {mismatches:?}");
}
