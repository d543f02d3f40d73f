use std::process::{Command, Output};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["--format", "json", "verify", "--suite", "table1", "--max-weight", "6"];
    let a = mzv(&args);
    let b = mzv(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let report = &v.as_array().unwrap()[0];
    assert_eq!(report["suite"], "table1");
    assert_eq!(report["summary"]["not-certified"], 0);
}

#[test]
fn verify_text_lists_suites() {
    let o = mzv(&["verify", "--suite", "weight6", "--max-weight", "6", "--flavor", "sh"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("suite weight6"));
}

#[test]
fn reduce_reports_verdicts_and_exit_codes() {
    let ok = mzv(&["--format", "json", "reduce", "--weight", "4", "z(3,1) - 1/4 z(4)", "--mod", "P,R"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["residue"], "0");

    let not = mzv(&["reduce", "--weight", "8", "z(5,3)", "--mod", "Zd:1,P,R"]);
    assert_eq!(not.status.code(), Some(1));
    assert!(stdout(&not).contains("not-certified"));

    let bad = mzv(&["reduce", "--weight", "4", "z(3", "--mod", "P"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn eval_prints_value_with_bound() {
    let o = mzv(&["--format", "json", "eval", "--numeric", "z(2,1) - z(3)", "--N", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let value = v["value"].as_f64().unwrap();
    let bound = v["errorBound"].as_f64().unwrap();
    assert!(value.abs() <= bound);
    assert_eq!(v["N"], 10000);
}

#[test]
fn weight_nine_needs_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rel.json");
    let out = out.to_str().unwrap();
    let o = mzv(&["db", "build", "--max-weight", "9", "--out", out]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-weight-9"));
    let o = mzv(&["verify", "--suite", "parity", "--max-weight", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mzv(&["verify", "--suite", "parity", "--max-weight", "10", "--allow-weight-9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn db_build_check_and_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.json");
    let p = path.to_str().unwrap();
    assert_eq!(mzv(&["db", "build", "--max-weight", "6", "--out", p]).status.code(), Some(0));
    let check = mzv(&["--format", "json", "db", "check", p]);
    assert_eq!(check.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
    assert_eq!(v["format"], "mzvrel/1");
    assert_eq!(v["maxWeight"], 6);

    let with_db = mzv(&["--format", "json", "verify", "--suite", "table1", "--max-weight", "6", "--db", p]);
    let without = mzv(&["--format", "json", "verify", "--suite", "table1", "--max-weight", "6"]);
    assert_eq!(with_db.stdout, without.stdout);

    std::fs::write(&path, "{\"format\":\"mzvrel/0\",\"maxWeight\":2,\"weights\":[]}").unwrap();
    assert_eq!(mzv(&["db", "check", p]).status.code(), Some(2));
}

#[test]
fn unknown_suite_is_an_error() {
    assert_eq!(mzv(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
