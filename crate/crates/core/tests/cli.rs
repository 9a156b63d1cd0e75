//! The installed binary, driven through files and standard input.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bettilab"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bettilab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_then_betti() {
    let path = scratch("path6.txt");
    let o = run(&["gen", "path", "6", "-o", path.to_str().unwrap()], "");
    assert!(o.status.success());
    let o = run(&["betti", path.to_str().unwrap()], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("total: 5 7 4 1"), "{}", stdout(&o));
}

#[test]
fn betti_from_stdin_json() {
    let o = run(&["betti", "-", "--json"], "x1*x2\nx1*x3\nx1*x4\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "minimal");
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn taylor_table() {
    let o = run(&["betti", "-", "--taylor"], "x1*x2\nx2*x3\nx3*x4\n");
    assert!(o.status.success());
    assert!(stdout(&o).contains("total: 3 3 1"), "{}", stdout(&o));
}

#[test]
fn check_reports_strict_diameter_gap() {
    let gen = run(&["gen", "path", "6"], "");
    let o = run(&["check", "diameter_eq", "-"], &stdout(&gen));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("diameter 5 > 4"), "{}", stdout(&o));
    let o = run(&["check", "tree_lb", "-", "--json"], &stdout(&gen));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem"], "tree_lb");
}

#[test]
fn precondition_failures_exit_one() {
    let o = run(&["check", "diameter_eq", "-"], "x1*x2*x3\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["check", "tree_lb", "-"], "x1*x2*x3\nx1*x2*x4\nx3*x4*x5\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("proper 3-coloring"));
}

#[test]
fn color_and_witness() {
    let o = run(&["color", "-"], "x1*x2\nx2*x3\n");
    assert_eq!(stdout(&o), "1: 1\n2: 2\n3: 1\n");
    let o = run(&["color", "-", "-d", "2"], "x1*x2\nx2*x3\nx1*x3\n");
    assert_eq!(stdout(&o), "not colorable\n");
    let o = run(&["witness", "-", "--blue", "1", "--bprime", "1,3", "--json"], "x1*x2\nx2*x3\nx3*x4\nx4*x5\n");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["reduced_betti"].as_u64().unwrap() >= 1);
}

#[test]
fn searches_and_limits() {
    let o = run(&["search", "section4", "--threads", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("t=7: 0 classes"), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[search]"));
    let o = run(&["search", "triple-union", "--t", "6", "--budget", "5"], "");
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["turan", "--n", "13", "--k", "7", "--l", "3"], "");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["betti"], "").status.code(), Some(1));
    assert_eq!(run(&["betti", "/nonexistent/file"], "").status.code(), Some(1));
    assert_eq!(run(&["betti", "-"], "x1^2\n").status.code(), Some(1));
    assert_eq!(run(&["gen", "nosuch"], "").status.code(), Some(1));
    let o = run(&["--help"], "");
    assert!(o.status.success() && stdout(&o).contains("Usage"));
}
