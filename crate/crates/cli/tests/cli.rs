//! End-to-end tests of the `qml` binary: subcommand output shapes, exit
//! codes, and byte-for-byte determinism of written reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qml"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("qml-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn kontsevich_table() {
    let out = qml(&["kontsevich", "--dmax", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("12"));
    assert!(text.contains("620"));
    assert!(text.contains("87304"));
}

#[test]
fn walls_json_contains_the_big_circle() {
    let out = qml(&["walls", "--v", "0,4,-5", "--bounds", "1,5,10"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let groups = parsed.as_array().unwrap();
    assert!(groups
        .iter()
        .all(|g| g["center"].as_str() == Some("-5/4")));
    assert!(groups
        .iter()
        .any(|g| g["radius"].as_str() == Some("7/4")));
}

#[test]
fn classify_the_triple_point() {
    let out = qml(&[
        "classify",
        "--curve",
        "x^4 + 2*x^2*y^2 + y^4 - 3*x^2*y*z + y^3*z",
        "--point",
        "0,0,1",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["multiplicity"], 3);
    assert_eq!(parsed["class"], "D4-ordinary-triple");
}

#[test]
fn hilbert_of_a_file_ideal() {
    let path = tmp("ideal.json");
    std::fs::write(
        &path,
        r#"{"vars": ["x","y","z"], "gens": ["x^2","x*y","y^2"]}"#,
    )
    .unwrap();
    let out = qml(&["hilbert", "--ideal", path.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["constant"], "3");
    std::fs::remove_file(&path).ok();
}

#[test]
fn limit_of_the_standard_family() {
    let path = tmp("family.json");
    std::fs::write(
        &path,
        r#"{"vars": ["x","y","z","t"], "gens": ["x^2","x*y","y^2 + t*z*x"]}"#,
    )
    .unwrap();
    let out = qml(&[
        "limit",
        "--family",
        path.to_str().unwrap(),
        "--degrees",
        "4..6",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["colength"], "9");
    assert_eq!(parsed["contains_fat_fourth"], true);
    assert_eq!(parsed["contained_in_fat_square"], true);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_writes_deterministic_reports() {
    let json_path = tmp("report.json");
    let run = |path: &PathBuf| {
        let out = qml(&[
            "verify",
            "--suite",
            "walls",
            "--seed",
            "5",
            "--samples",
            "4",
            "--out",
            path.to_str().unwrap(),
            "--format",
            "json",
        ]);
        assert!(out.status.success());
        std::fs::read(path).unwrap()
    };
    let a = run(&json_path);
    let b = run(&json_path);
    assert_eq!(a, b, "same seed gives byte-identical reports");
    let md = json_path.with_extension("md");
    assert!(md.exists(), "markdown summary written next to the JSON");
    std::fs::remove_file(&json_path).ok();
    std::fs::remove_file(&md).ok();
}

#[test]
fn unknown_suite_fails() {
    let out = qml(&["verify", "--suite", "bogus", "--samples", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn thread_cap_env_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_qml"))
        .args(["verify", "--suite", "reps", "--samples", "1"])
        .env("QML_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}
