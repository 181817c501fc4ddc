use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_corona-sym"));
    for var in [
        "SEED",
        "WORKERS",
        "VERTEX_CAP",
        "GROUP_CAP",
        "LABELING_CAP",
        "RANDOM_PREPASS",
    ] {
        cmd.env_remove(format!("CORONA_SYM_{var}"));
    }
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn corpus_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn family_and_corona() {
    let out = run(&["family", "complete", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "C~");

    let v = json(&["corona", "Ch", "Bg"]);
    assert_eq!(v["schema"], "corona-sym/cli/v1");
    assert_eq!(v["order"], 16);
    assert_eq!(v["size"], 29);
    assert_eq!(v["roles"][0]["role"], "base");
    assert_eq!(v["roles"][4]["role"], "copy");
    assert_eq!(v["roles"][4]["copy"], 0);
}

#[test]
fn edge_list_and_stdin_input() {
    let v = json(&["aut", "n 3\\n0 1\\n1 2"]);
    assert_eq!(v["order"], 2);

    let mut child = bin()
        .args(["--format", "json", "dnum", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"n 4\n0 1\n1 2\n2 3\n3 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["value"], 3);
    assert_eq!(v["report"]["witness"], serde_json::json!([1, 1, 2, 3]));
}

#[test]
fn aut_lists_elements_in_cycle_notation() {
    let out = run(&["aut", "Ch", "--elements"]);
    assert_eq!(stdout(&out), "order 2\n()\n(0 3)(1 2)\n");
}

#[test]
fn distinguishing_values() {
    assert_eq!(json(&["dnum", "C~"])["report"]["value"], 4);
    assert_eq!(json(&["dindex", "Ch"])["report"]["value"], 2);
    let out = run(&["dindex", "A_"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("undefined"));
}

#[test]
fn labels_verify() {
    let v = json(&["label", "friendship", "2"]);
    assert_eq!(v["label_count"], 2);
    assert_eq!(v["distinguishing"], true);

    let v = json(&["label", "splitting-vertex", "Bg", "--base", "1,1,2"]);
    assert_eq!(v["labeling"], serde_json::json!([1, 1, 2, 1, 1, 2]));

    let v = json(&["label", "corona-edge", "Ch", "Bg"]);
    assert_eq!(v["distinguishing"], true);
    assert!(v["labeling"][0].as_array().unwrap().len() == 3);

    assert!(run(&["verify", "Bg", "1,1,2"]).status.success());
    let out = run(&["verify", "Bg", "1,2,1"]);
    assert!(!out.status.success());
    assert_eq!(stdout(&out).trim(), "distinguishing: false");
    assert!(run(&["verify", "Ch", "1,1,2", "--edges"]).status.success());
}

#[test]
fn invalid_base_is_rejected() {
    let out = run(&["label", "splitting-vertex", "Bg", "--base", "1,2,1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not distinguishing"));
}

#[test]
fn config_precedence() {
    assert_eq!(json(&["family", "path", "3"])["config"]["seed"], 0);
    let out = bin()
        .env("CORONA_SYM_SEED", "7")
        .env("CORONA_SYM_VERTEX_CAP", "20")
        .args(["--format", "json", "family", "path", "3"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["vertex_cap"], 20);
    let out = bin()
        .env("CORONA_SYM_SEED", "7")
        .args(["--format", "json", "--seed", "9", "family", "path", "3"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 9);
}

#[test]
fn caps_are_enforced() {
    let out = run(&["--vertex-cap", "4", "aut", "D~{"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex cap"));
    assert!(!run(&["--workers", "0", "family", "path", "3"])
        .status
        .success());
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("wall_time_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn check_theorems_passes_and_is_deterministic() {
    let path = corpus_file(
        "clean.txt",
        "# singles\nBg\nBw\nCr\n# pairs\nCh Bg\nBw @\nCr Bw\n",
    );
    let args = [
        "--format",
        "json",
        "check-theorems",
        "--corpus",
        path.to_str().unwrap(),
    ];
    let first = bin().args(args).output().unwrap();
    assert!(first.status.success(), "{}", stdout(&first));
    let mut a: Value = serde_json::from_slice(&first.stdout).unwrap();
    let mut b: Value = serde_json::from_slice(&bin().args(args).output().unwrap().stdout).unwrap();
    assert_eq!(a["schema"], "corona-sym/theorems/v1");
    assert_eq!(a["passed"], true);
    assert_eq!(a["reports"].as_array().unwrap().len(), 15);
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(a, b);
}

#[test]
fn check_theorems_reports_counterexamples() {
    let path = corpus_file("path4.txt", "Ch\n");
    let out = run(&["check-theorems", "--corpus", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let text = stdout(&out);
    assert!(text.contains("C2.6            FAIL"));
    assert!(text.contains("(0 5)(1 2)(3 6)(4 7)"));
}
