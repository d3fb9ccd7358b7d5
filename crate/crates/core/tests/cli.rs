use std::process::{Command, Output};

use serde_json::Value;

use lens_surgery::exact::text::parse_bilaurent;
use lens_surgery::linkalg::alexander_a;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lens-surgery")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn no_json_numbers(v: &Value) -> bool {
    match v {
        Value::Number(_) => false,
        Value::Array(xs) => xs.iter().all(no_json_numbers),
        Value::Object(m) => m.values().all(no_json_numbers),
        _ => true,
    }
}

#[test]
fn alexander_commands() {
    let out = stdout(&["alexander", "A", "3", "5", "--oracle"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["1 + t^3*x + t^5*x^2 + t^6*x^3 + t^9*x^4 + t^10*x^5 + t^12*x^6 + t^15*x^7", "MATCH"]);
    assert_eq!(stdout(&["alexander", "B", "2", "1"]).trim(), "1 + t*x");
}

#[test]
fn alexander_json_round_trips() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "alexander", "A", "4", "7"])).unwrap();
    let p = parse_bilaurent(v["polynomial"].as_str().unwrap()).unwrap();
    assert_eq!(p, alexander_a(4, 7).unwrap());
    assert!(no_json_numbers(&v));
}

#[test]
fn decide_headlines() {
    let first = |args: &[&str]| stdout(args).lines().next().unwrap().to_string();
    assert!(first(&["decide", "A", "2", "3", "7", "1"]).ends_with("LENS L(25,7)"));
    assert!(first(&["decide", "B", "8", "3", "22", "1"]).ends_with("NOT-LENS (norm=2^phi(d))"));
    assert!(first(&["decide", "A", "2", "3", "8", "1"]).ends_with("NOT-LENS (no (e,f) witness)"));
    assert!(first(&["classify", "a-23-7-r", "0", "1"]).ends_with("LENS L(25,18)"));
    assert!(stdout(&["lens-eq", "25", "7", "18", "--oriented"]).contains(" EQUIVALENT"));
}

#[test]
fn decide_json_uses_strings() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "decide", "A", "2", "3", "7", "1"])).unwrap();
    assert_eq!(v["kind"], "lens");
    assert_eq!(v["lens"]["P"], "25");
    assert!(no_json_numbers(&v));
}

#[test]
fn small_scans() {
    let out = stdout(&["scan", "A", "--max-mn", "5", "--summary"]);
    let hits: Vec<&str> = out.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(hits, ["A(2,3) r = 6/1 -> L(25,9)", "A(2,3) r = 7/1 -> L(25,7)"]);
    let out =
        stdout(&["scan", "B", "--p-max", "3", "--q-max", "2", "--beta-max", "1", "--alpha-window", "20", "--summary"]);
    assert_eq!(out.lines().last(), Some("0 mismatches"));
}

#[test]
fn scan_lines_do_not_depend_on_jobs() {
    let args = ["scan", "A", "--max-mn", "7", "--beta-max", "2", "--alpha-window", "30"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let three = stdout(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one, three);
    for line in one.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(no_json_numbers(&v), "{line}");
    }
    let first: Value = serde_json::from_str(one.lines().next().unwrap()).unwrap();
    for key in ["family", "params", "verdict", "certificates"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["decide", "A", "2", "4", "7", "1"]).status.code(), Some(1));
    assert_eq!(run(&["decide", "A", "2", "3", "7", "0"]).status.code(), Some(1));
    assert_eq!(run(&["alexander", "C", "2", "3"]).status.code(), Some(1));
    assert_eq!(run(&["norm", "1 - t +", "3"]).status.code(), Some(1));
    let out = run(&["lens-eq", "4", "1", "3", "--oriented"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("NOT-EQUIVALENT"));
}

#[test]
fn selfcheck_reports_suites() {
    let out = stdout(&["selfcheck", "--max-mn", "10"]);
    assert_eq!(out.lines().last(), Some("PASS"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 4);
    let bad = run(&["selfcheck", "--max-mn", "10", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(2));
    let text = String::from_utf8_lossy(&bad.stdout);
    assert!(text.contains("FAIL injected fault"));
    assert!(text.contains("deliberately false"));
}

#[test]
fn torsion_subcommands() {
    for args in [
        &["torsion", "a-r0", "2", "3", "7", "1"][..],
        &["torsion", "b-r0", "8", "3", "23", "1"],
        &["torsion", "lens", "25", "7", "5"],
        &["torsion", "a-mn-r", "2", "3", "0", "1"],
        &["torsion", "a-23-7-r", "0", "1"],
        &["torsion", "r", "2", "3"],
    ] {
        stdout(args);
    }
    assert_eq!(stdout(&["torsion", "r", "2", "3", "--form", "5"]).trim(), stdout(&["torsion", "r", "2", "3"]).trim());
    assert_eq!(run(&["torsion", "a-r0", "2", "3", "5", "1"]).status.code(), Some(1));
}

#[test]
fn norms_and_franz() {
    let out = stdout(&["norm", "1 - t", "4", "6"]);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["N_4 = 2", "N_6 = 1"]);
    assert!(stdout(&["franz-solve"]).starts_with("(m,n)=(2,3) (i,j)=(1,3)"));
}
