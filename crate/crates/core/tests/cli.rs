mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::scratch_path;

fn voxgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voxgap")).args(args).output().unwrap()
}

fn voxgap_on(cmd: &str, path: &Path, extra: &[&str]) -> Output {
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    voxgap(&args)
}

fn fixture(name: &str, body: &str) -> std::path::PathBuf {
    let path = scratch_path(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn census_rows() {
    let single = fixture("single.txt", "0 0 0\n");
    let out = voxgap_on("census", &single, &[]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("i=0: 8 8 0\n"));

    let tandem = fixture("tandem.txt", "# 1-tandem\n0 0 0\n1 1 0\n");
    assert!(stdout(&voxgap_on("census", &tandem, &[])).contains("i=1: 23 23 0\n"));

    let face = fixture("face.txt", "0 0 0\n1 0 0\n");
    assert!(stdout(&voxgap_on("census", &face, &[])).contains("i=2: 11 10 1\n"));
}

#[test]
fn census_json() {
    let face = fixture("face-json.txt", "0 0 0\n1 0 0\n");
    let out = voxgap_on("census", &face, &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"][2]["non_free"], 1);
    assert_eq!(v["rows"][3]["total"], 2);
}

#[test]
fn gaps_reports() {
    let diag = fixture("diag.txt", "0 0 0\n1 1 1\n");
    let s = stdout(&voxgap_on("gaps", &diag, &[]));
    assert!(s.contains("g0=1 g1=0\n"), "{s}");
    assert!(s.contains("hub0 (1/2,1/2,1/2) doubled=(1,1,1)"), "{s}");
    assert!(s.contains("g0=1 formula=1 agree"), "{s}");

    let face = fixture("face-gaps.txt", "0 0 0\n1 0 0\n");
    assert!(stdout(&voxgap_on("gaps", &face, &[])).contains("g0=0 g1=0"));

    let tandem = fixture("tandem-gaps.txt", "0 0 0\n1 1 0\n");
    assert!(stdout(&voxgap_on("gaps", &tandem, &[])).contains("g1=1 formula=1 agree"));
}

#[test]
fn gaps_json_is_structured() {
    let diag = fixture("diag.json", r#"{"n": 3, "voxels": [[0,0,0],[1,1,1]]}"#);
    let out = voxgap_on("gaps", &diag, &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["gaps"][0]["g"], 1);
    assert_eq!(v["gaps"][0]["hubs"][0]["point"], "(1/2,1/2,1/2)");
    assert_eq!(v["g0_agrees"], true);
}

#[test]
fn verify_exit_codes() {
    let gen = scratch_path("gen-verify.txt");
    assert!(voxgap(&["gen", "--length", "25", "--seed", "3", "--out", gen.to_str().unwrap()]).status.success());
    let out = voxgap_on("verify", &gen, &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict: pass"));

    let cube = fixture(
        "cube.txt",
        "0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n",
    );
    let out = voxgap_on("verify", &cube, &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0-curve=no"));

    let broken = fixture("broken.txt", "0 0 0\n1 one 1\n");
    let out = voxgap_on("verify", &broken, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(voxgap_on("verify", Path::new("/nonexistent/file"), &[]).status.code(), Some(2));
}

#[test]
fn verify_json() {
    let diag = fixture("diag-verify.txt", "0 0 0\n1 1 1\n");
    let out = voxgap_on("verify", &diag, &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["curve"]["is_valid"], true);
}

#[test]
fn duplicates_strict_and_lenient() {
    let dup = fixture("dup.txt", "0 0 0\n0 0 0\n1 1 1\n");
    let out = voxgap_on("census", &dup, &["--strict"]);
    assert_eq!(out.status.code(), Some(2));
    let out = voxgap_on("census", &dup, &[]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("n=3 voxels=2\n"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dropped 1 duplicate"));
}

#[test]
fn other_dimensions() {
    let square = fixture("square.txt", "0 0\n1 1\n");
    let s = stdout(&voxgap_on("gaps", &square, &["--n", "2"]));
    assert!(s.contains("g0=1\n"), "{s}");
    assert_eq!(voxgap_on("verify", &square, &["--n", "2"]).status.code(), Some(0));
}

#[test]
fn gen_is_deterministic_and_checked() {
    let a = stdout(&voxgap(&["gen", "--length", "30", "--seed", "7"]));
    let b = stdout(&voxgap(&["gen", "--length", "30", "--seed", "7"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 30);

    let two = stdout(&voxgap(&["gen", "--length", "2", "--seed", "0"]));
    assert_eq!(two.lines().count(), 2);

    let out = voxgap(&["gen", "--length", "1", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn constants_table() {
    let out = voxgap(&["constants", "--n", "3"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("(0,1): 2 | 6 "), "{s}");
    assert!(s.contains("(2,3): 6 | 2 "), "{s}");
    assert!(!s.contains("MISMATCH"));
    let s = stdout(&voxgap(&["constants", "--n", "4"]));
    assert!(s.contains("(2,4): 24 |"), "{s}");
    assert_eq!(voxgap(&["constants", "--n", "6"]).status.code(), Some(2));
}
