use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plucker-git")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn golden(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(got, golden(name));
}

#[test]
fn minimal_n8_golden() {
    check_golden(&["--json", "minimal", "--n", "8"], "minimal_n8.json");
}

#[test]
fn stability_golden() {
    check_golden(&["--json", "stability", "--n", "8", "--w", "5,8"], "stability_n8_w58.json");
}

#[test]
fn jacobian_golden() {
    check_golden(
        &["--json", "jacobian", "--case", "x68", "--point", "0,0,0,0,0,0,0,0,1", "--codim", "4"],
        "jacobian_x68.json",
    );
}

#[test]
fn relations_golden() {
    check_golden(&["--json", "relations", "--n", "8", "--w", "6,8", "--v", "1,3", "--degree", "2"], "relations_n8_k2.json");
}

#[test]
fn confluence_golden() {
    check_golden(&["--json", "confluence"], "confluence_6.json");
}

#[test]
fn singular_count_n6() {
    let o = run(&["singular-count", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "10");
}

#[test]
fn reproduce_case_exits_zero() {
    for case in ["g26", "x68"] {
        let o = run(&["reproduce", "--case", case]);
        assert_eq!(o.status.code(), Some(0), "{case}");
        assert!(stdout(&o).contains("0 failed"));
    }
}

#[test]
fn failing_identity_exits_one() {
    let o = run(&["verify", "--n", "6", "--lhs", "p[1,3]*p[2,4]", "--rhs", "p[1,2]*p[3,4]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify", "--n", "4", "--lhs", "p[1,3]*p[2,4]", "--rhs", "p[1,2]*p[3,4]+p[1,4]*p[2,3]"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["straighten", "--n", "6", "p[3,3]"][..],
        &["straighten", "--n", "6", "p[1,2"][..],
        &["reproduce", "--case", "foo"][..],
        &["minimal", "--n", "7"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
}
