use std::io::Write;
use std::process::{Command, Stdio};

use arrangements::cli::Report;
use serde_json::json;

const POINTS: &str = r#"{"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"0"},{"coeffs":["1"],"constant":"-1"}],"weights":["1","2"]}"#;

fn run(args: &[&str], stdin: &str) -> (Option<i32>, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arrangements"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn malformed_json_exits_2() {
    let (code, out) = run(&["lattice"], "[1, 2");
    assert_eq!(code, Some(2));
    assert_eq!(Report::from_json(&out).unwrap().error.unwrap().code, "parse");
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(run(&["gram", "--degree", "1", "--bogus"], POINTS).0, Some(2));
    assert_eq!(run(&["lattice", "--format", "yaml"], POINTS).0, Some(2));
}

#[test]
fn gram_of_points_is_diagonal() {
    let (code, out) = run(&["gram", "--degree", "1"], POINTS);
    assert_eq!(code, Some(0));
    let r = Report::from_json(&out).unwrap();
    assert_eq!(r.results["matrix"], json!([["1", "0"], ["0", "2"]]));
}

#[test]
fn input_file_and_stdin_agree() {
    let dir = std::env::temp_dir().join(format!("arrangements-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("points.json");
    std::fs::write(&path, POINTS).unwrap();
    let (_, a) = run(&["os-dim", "--input", path.to_str().unwrap()], "");
    let (_, b) = run(&["os-dim"], POINTS);
    assert_eq!(a, b);
    let r = Report::from_json(&a).unwrap();
    assert_eq!(r.results["dimensions"], json!([1, 2]));
    assert_eq!(r.results["projective_dimensions"], json!([1, 2]));
}

#[test]
fn literal_diagram_check_fails_with_exit_1() {
    let (code, out) = run(&["verify", "--theorem", "diagram", "--input", "/dev/stdin"], POINTS);
    assert_eq!(code, Some(1));
    assert_eq!(Report::from_json(&out).unwrap().passed, Some(false));
}
