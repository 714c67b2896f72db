use std::path::Path;
use std::process::{Command, Output};

fn mirhecke(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirhecke")).args(args).env("MIRHECKE_CACHE", cache).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dim() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["dim", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7\n");
    let o = mirhecke(dir.path(), &["dim", "--n", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().len() > 40);
}

#[test]
fn table_csv_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["table", "--n", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lambda\\mu,0,1\n0,1,1\n1,0,1\n");
    assert!(dir.path().join("mn-oracle.json").exists());
}

#[test]
fn table_json_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    for (out, jobs) in [(&out1, "1"), (&out2, "3")] {
        let o = mirhecke(dir.path(), &["table", "--n", "3", "--jobs", jobs, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let a = std::fs::read(&out1).unwrap();
    assert_eq!(a, std::fs::read(&out2).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn classpoly() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["classpoly", "--n", "2", "--index", "A=1;B=2;w=1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["f"]["0"]["coeffs"]["0"], "-1");
    assert_eq!(v["index"]["A"], serde_json::json!([1]));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["classpoly", "--n", "2", "--index", "A=1;B=9;w=1,2"][..],
        &["classpoly", "--n", "3", "--index", "A=1;B=2;w=1,2"],
        &["pieri", "--m", "2", "--nu", "1.2"],
        &["table", "--n", "x"],
        &["verify", "--n", "2", "--suite", "everything"],
        &["table", "--n", "2", "--g-variant", "other"],
        &["table", "--n", "2", "--jobs", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(mirhecke(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn pieri_reports_cross_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["pieri", "--m", "2", "--nu", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["expansion"], v["brute_force"]);

    let o = mirhecke(dir.path(), &["pieri", "--m", "2", "--nu", "0", "--g-variant", "paper"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
}

#[test]
fn verify_all_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["verify", "--n", "2", "--r", "2", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    let checks = v["diagnostics"].as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|d| d["status"] == "pass"));
}

#[test]
fn verify_relations_n4_and_r_mode() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["verify", "--n", "4", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0));
    let o = mirhecke(dir.path(), &["verify", "--n", "2", "--suite", "oracle", "--r-mode", "n-plus-1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"], 3);
}

#[test]
fn verify_paper_variant_fails_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = mirhecke(dir.path(), &["verify", "--n", "3", "--suite", "pieri", "--g-variant", "paper"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
    assert!(v["diagnostics"].as_array().unwrap().iter().any(|d| d["check"].as_str().unwrap().starts_with("pieri m=2 nu=0")
        && d["status"] == "fail"));
}
