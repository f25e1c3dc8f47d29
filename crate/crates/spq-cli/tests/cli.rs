use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn spq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spq")).args(args).output().expect("spq runs")
}

fn code(args: &[&str]) -> i32 {
    spq(args).status.code().expect("exit code")
}

fn reports(dir: &Path) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&["verify", "nonsense", "--n", "2", "--blocks", ";1,1"]), 64);
    assert_eq!(code(&["verify", "minpoly", "--n", "3", "--blocks", ";1,2", "--depth", "4"]), 64);
    assert_eq!(code(&["verify", "rootdata", "--n", "2", "--blocks", "1;1,1"]), 64);
    assert_eq!(code(&["verify", "rootdata", "--n", "2"]), 64);
    assert_eq!(code(&["verify"]), 64);
    assert_eq!(code(&["class", "gl", "2:1,2:1"]), 64);
}

#[test]
fn reports_and_coverage_summary() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = spq(&["verify", "rootdata", "--n", "2", "--blocks", ";1,1", "--report-dir", d]);
    assert_eq!(out.status.code(), Some(0));
    let files = reports(dir.path());
    assert_eq!(files.len(), 2);
    let summary: serde_json::Value = serde_json::from_str(&files.iter().find(|f| f.0 == "summary.json").unwrap().1).unwrap();
    let cov = summary["coverage"].as_array().unwrap();
    assert!(cov.iter().any(|c| c["suite"] == "rootdata" && c["status"] == "pass"));
    assert!(cov.iter().any(|c| c["suite"] == "minpoly" && c["status"] == "not-run"));
    let report: serde_json::Value = serde_json::from_str(&files.iter().find(|f| f.0 != "summary.json").unwrap().1).unwrap();
    assert_eq!(report["suite"], "rootdata");
    assert_eq!(report["case"]["blocks"], ";1,1");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("anchor coverage"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let run = |seed: &str| {
        let dir = tempfile::tempdir().unwrap();
        let args =
            ["verify", "minpoly", "--n", "2", "--blocks", ";1,1", "--depth", "6", "--seed", seed, "--report-dir", dir.path().to_str().unwrap()];
        assert_eq!(code(&args), 0);
        reports(dir.path())
    };
    let a = run("3");
    assert_eq!(a, run("3"));
    let statuses = |r: &[(String, String)]| -> Vec<String> {
        r.iter()
            .filter(|f| f.0 != "summary.json")
            .flat_map(|f| {
                let v: serde_json::Value = serde_json::from_str(&f.1).unwrap();
                v["checks"].as_array().unwrap().iter().map(|c| c["status"].to_string()).collect::<Vec<_>>()
            })
            .collect()
    };
    let b = run("4");
    assert_ne!(a, b);
    assert_eq!(statuses(&a), statuses(&b));
}

#[test]
fn generic_lambda_negative_control_exits_zero() {
    let out = spq(&["verify", "minpoly", "--n", "2", "--blocks", ";1,1", "--generic-lambda"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8(out.stdout).unwrap().contains("mode=generic-lambda"));
}

#[test]
fn class_subcommand() {
    let out = spq(&["class", "gl", "2:2,1/3:1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(code(&["class", "sp", "4:1,-1:2,1:2,1/4:1"]), 0);
}
