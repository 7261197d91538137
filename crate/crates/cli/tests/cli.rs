use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m4cyclic")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn profile_file(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("{name}.json"));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn factor_lists() {
    let cases = [
        ("3", vec!["x + 1", "x + w^5", "x + w^10"]),
        ("5", vec!["x + 1", "x + w^3", "x + w^6", "x + w^9", "x + w^12"]),
        ("7", vec!["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]),
    ];
    for (n, want) in cases {
        let o = run(&["factor", "--n", n, "--tsv"]);
        assert_eq!(code(&o), 0);
        let got: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').nth(1).unwrap().to_string()).collect();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["factor", "--n", "4"])), 2);
    assert_eq!(code(&run(&["build", "--n", "3"])), 2);
    assert_eq!(code(&run(&["build", "--gen", "1"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let o = run(&["build", "--n", "3", "--k", "1", "--gen", "(w v + )f_2"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("column 7") && err.contains("^"), "{err}");
    assert_eq!(code(&run(&["build", "--n", "3", "--k", "1", "--gen", "f_9"])), 2);
}

#[test]
fn unit_generator_gives_full_space() {
    for (n, k) in [("3", "1"), ("3", "2"), ("5", "1")] {
        let o = run(&["build", "--n", n, "--k", k, "--gen", "1", "--json"]);
        assert_eq!(code(&o), 0);
        let len = 4 * n.parse::<u64>().unwrap() * k.parse::<u64>().unwrap();
        assert_eq!(json(&o)["outputs"]["params"], serde_json::json!([len, len, 1]));
    }
}

#[test]
fn build_report_round_trips() {
    let args = [
        "build",
        "--n",
        "5",
        "--k",
        "1",
        "--gen",
        "(w v^3 + w^2v^2 + w^5)f_2",
        "--gen",
        "(w^2 v^2 + w v + w^5)f_1f_3f_4f_5",
        "--json",
    ];
    let first = json(&run(&args));
    let inputs = &first["inputs"];
    let n = inputs["n"].to_string();
    let k = inputs["k"].to_string();
    let seed = inputs["seed"].to_string();
    let mut again: Vec<String> = vec!["build".into(), "--n".into(), n, "--k".into(), k, "--seed".into(), seed];
    for g in inputs["generators"].as_array().unwrap() {
        again.push("--gen".into());
        again.push(g.as_str().unwrap().into());
    }
    again.push("--json".into());
    let again: Vec<&str> = again.iter().map(|s| s.as_str()).collect();
    let second = json(&run(&again));
    assert_eq!(first["outputs"], second["outputs"]);
    assert_eq!(first["outputs"]["params"][0], 20);
    assert!(first["command"].as_str().unwrap().starts_with("m4cyclic build --n 5"));
}

#[test]
fn profile_build_reports_cardinality() {
    let p = profile_file("u_class", r#"{"n":7,"k":1,"classes":{"1":[1]}}"#);
    let o = run(&["build", "--profile", p.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    // <u^0 (x^7-1)/(x+1)>: one factor of degree 1 in the top class
    assert_eq!(v["outputs"]["cardinality"]["xi"], 4);
    assert_eq!(v["outputs"]["params"][1], 4);
    assert_eq!(v["inputs"]["profile"]["classes"]["1"], serde_json::json!([1]));
}

#[test]
fn dual_of_zero_code_is_everything() {
    let p = profile_file("zero", r#"{"n":3,"k":1,"classes":{}}"#);
    let o = run(&["dual", "--profile", p.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v = &json(&o)["outputs"];
    assert_eq!(v["eta"], 12);
    assert_eq!(v["dim_dual"], 12);
    assert_eq!(v["ok"], true);
}

#[test]
fn dual_violation_exits_1() {
    let p = profile_file("v_class", r#"{"n":3,"k":1,"classes":{"2":[1]}}"#);
    let o = run(&["dual", "--profile", p.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["outputs"]["violations"].as_u64().unwrap() > 0);
}

#[test]
fn hermitian_equals_euclidean_at_n7() {
    let p = profile_file("n7", r#"{"n":7,"k":1,"classes":{"1":[2],"3":[3]}}"#);
    let path = p.to_str().unwrap();
    let e = json(&run(&["dual", "--profile", path, "--json"]));
    let h = json(&run(&["dual", "--profile", path, "--hermitian", "--json"]));
    let strip = |v: &Value| -> Vec<String> {
        v["outputs"]["generators"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g.as_str().unwrap().split_once(": ").unwrap().1.to_string())
            .collect()
    };
    assert_eq!(strip(&e), strip(&h));
    assert_eq!(h["outputs"]["flavor"], "hermitian");
    assert_eq!(h["outputs"]["conj_mode"], "coeff");
}

#[test]
fn image_level_dual_for_expressions() {
    let o = run(&["dual", "--n", "3", "--k", "1", "--gen", "v f_1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = &json(&o)["outputs"];
    assert_eq!(v["image_level"], true);
    assert_eq!(v["dim_c"].as_u64().unwrap() + v["dim_dual"].as_u64().unwrap(), 12);
}

#[test]
fn mindist_modes_agree() {
    let base = ["mindist", "--n", "3", "--k", "1", "--gen", "(w v^3 + w)f_1f_2", "--gen", "v^3 f_1f_3", "--json"];
    let c = json(&run(&base));
    let mut ex = base.to_vec();
    ex.push("--exhaustive");
    let e = json(&run(&ex));
    assert_eq!(c["outputs"]["params"], e["outputs"]["params"]);
    assert_eq!(e["outputs"]["distance"]["certificate"]["kind"], "exhaustive");
}

#[test]
fn reproduce_reports_rows_and_exits_on_mismatch() {
    let o = run(&["reproduce", "--example", "1", "--json"]);
    let v = json(&o);
    let rows = v["outputs"][0]["rows"].as_array().unwrap();
    let expected: Vec<Value> = rows.iter().map(|r| r["expected"].clone()).collect();
    assert_eq!(expected, serde_json::from_str::<Vec<Value>>("[[20,14,5],[20,16,3],[20,15,4],[20,19,2]]").unwrap());
    let all_match = rows.iter().all(|r| r["verdict"] == "match");
    assert_eq!(code(&o), if all_match { 0 } else { 1 });
    for r in rows.iter().filter(|r| r["verdict"] == "mismatch") {
        assert!(r["distance"]["witness"].is_string());
        assert_eq!(r["distance"]["exact"], true);
    }
    let o4 = json(&run(&["reproduce", "--example", "4", "--json"]));
    let existing: Vec<Value> =
        o4["outputs"][0]["rows"].as_array().unwrap().iter().map(|r| r["existing"].clone()).collect();
    assert_eq!(existing[1], serde_json::json!([28, 14, 3]));
    assert_eq!(code(&run(&["reproduce", "--example", "9"])), 2);
}

#[test]
fn verify_core_is_vacuous_and_iso_passes() {
    let o = run(&["verify", "--suite", "core", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["outputs"]["suites"][0]["checks"], serde_json::json!([]));
    assert_eq!(code(&run(&["verify", "--suite", "iso"])), 0);
    let p = profile_file("core_in", r#"{"n":5,"k":1,"classes":{"1":[1],"2":[2,3]}}"#);
    assert_eq!(code(&run(&["verify", "--suite", "core", "--profile", p.to_str().unwrap()])), 0);
}

#[test]
fn enumeration_limit_is_a_usage_error() {
    let o = run(&["mindist", "--n", "3", "--k", "1", "--gen", "(w v^3 + w)f_2", "--exhaustive"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("enumeration limit"));
}
