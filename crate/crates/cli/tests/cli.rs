use std::path::PathBuf;
use std::process::{Command, Output};

fn kfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfib")).args(args).output().expect("run kfib")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn eval_prints_the_polynomial() {
    let out = kfib(&["eval", "-k", "3", "-n", "-17"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 - 5x^3 - 6x^6 + 4x^9 + 5x^12 + x^15");
    let at = kfib(&["eval", "-k", "3", "-n", "-17", "--at", "1"]);
    assert_eq!(stdout(&at).trim(), "0");
    let half = kfib(&["eval", "-k", "2", "-n", "5", "--at", "1/2"]);
    // x^4 + 3x^2 + 1
    assert_eq!(stdout(&half).trim(), "29/16");
}

#[test]
fn profile_json() {
    let out = kfib(&["profile", "-k", "4", "-n", "-10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], 2);
    assert_eq!(v["r"], 3);
    assert_eq!(v["vanishes"], true);
}

#[test]
fn factored_forms() {
    let out = kfib(&["factor", "-k", "3", "-n", "8"]);
    assert_eq!(stdout(&out).trim(), "x^2*(1+x^3)^2*(6+4x^3+x^6)");
    let out = kfib(&["factor", "-k", "3", "-n", "-18"]);
    assert_eq!(stdout(&out).trim(), "-x*(6+20x^3+36x^6+30x^9+10x^12+x^15)");
}

#[test]
fn sigma_sum_for_positive_index() {
    let out = kfib(&["sigma", "-k", "3", "-n", "6"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "sum = -4"), "{text}");
}

#[test]
fn roots_json_and_csv() {
    let out = kfib(&["roots", "-k", "3", "-n", "10", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let real = v["x_real_roots"].as_array().unwrap();
    assert_eq!(real.len(), 2);
    assert!((real[0].as_f64().unwrap() + 0.862794).abs() < 1e-5);
    let csv = kfib(&["roots", "-k", "2", "-n", "7", "--format", "csv"]);
    assert_eq!(stdout(&csv).lines().count(), 1 + 3);
}

#[test]
fn table_output() {
    let out = kfib(&["table", "table3"]);
    let text = stdout(&out);
    assert!(text.contains("x^2(1+x^3)^2(6+4x^3+x^6)"), "{text}");
    let csv = kfib(&["table", "table1", "--format", "csv"]);
    let first = stdout(&csv).lines().next().unwrap().to_string();
    assert!(first.starts_with("n,"), "{first}");
}

#[test]
fn zeta_to_file() {
    let path = scratch("zeta.csv");
    let out = kfib(&["zeta", "-k", "4", "--from", "-12", "--to", "-8", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("n,zeta,r"));
    assert!(text.lines().any(|l| l == "-8,2,1"), "{text}");
}

#[test]
fn figure_data() {
    let out = kfib(&["figure-data", "fig1", "--from", "-3", "--to", "3"]);
    assert_eq!(stdout(&out), "n,degree\n1,0\n2,4\n3,8\n");
}

#[test]
fn verify_small_scope() {
    let out = kfib(&["verify", "--k-max", "3", "--n-abs-max", "20", "--suite", "vanishing", "--suite", "theorem1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "result: PASS"), "{text}");
    assert!(text.contains("PASS theorem1"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(kfib(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(kfib(&["factor", "-k", "1", "-n", "3"]).status.code(), Some(2));
    assert_eq!(kfib(&["roots", "-k", "4", "-n", "-10"]).status.code(), Some(2));
    assert_eq!(kfib(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(kfib(&["--help"]).status.code(), Some(0));
}
