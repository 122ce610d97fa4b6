use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pursuit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = pursuit(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn bound_prints_exact_fraction() {
    let o = pursuit(&["bound", "--d", "2", "--speed", "2", "--m", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("1/18 "));
    let v = json(&["bound", "--d", "2", "--speed", "2", "--m", "2"]);
    assert_eq!(v["bound"], "1/18");
    assert_eq!(v["alpha"], "1/2");
}

#[test]
fn copnum_of_petersen() {
    let o = pursuit(&["copnum", "--speed", "1", "--max-cops", "3", "catalog:petersen"]);
    assert_eq!(stdout(&o).trim(), "3");
    let v = json(&["copnum", "--speed", "1", "--max-cops", "2", "catalog:petersen"]);
    assert!(v["cop_number"].is_null());
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn copnum_respects_state_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args(["copnum", "--speed", "1", "--max-cops", "3", "catalog:petersen"])
        .env("PURSUIT_STATE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn girth_of_catalog_graph() {
    let o = pursuit(&["girth", "catalog:tutte-12-cage"]);
    assert_eq!(stdout(&o).trim(), "12");
    let v = json(&["girth", "catalog:tutte-12-cage"]);
    assert_eq!(v["n"], 126);
    assert_eq!(v["girth"], 12);
}

#[test]
fn exit_codes() {
    assert_eq!(pursuit(&["girth", "catalog:nope"]).status.code(), Some(1));
    assert_eq!(pursuit(&["bound", "--d", "2", "--speed", "2", "--m", "4"]).status.code(), Some(1));
    assert_eq!(pursuit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pursuit(&["bound", "--d", "x"]).status.code(), Some(2));
    assert_eq!(pursuit(&["--help"]).status.code(), Some(0));
}

#[test]
fn catalog_roundtrip_through_file() {
    let dir = std::env::temp_dir().join(format!("pursuit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("heawood.txt");
    let o = pursuit(&["catalog", "get", "heawood"]);
    std::fs::write(&file, &o.stdout).unwrap();
    let o = pursuit(&["girth", file.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "6");
    let padded = pursuit(&["pad-path", file.to_str().unwrap(), "--n", "17"]);
    assert_eq!(stdout(&padded).lines().count(), 1 + 21 + 3);
    let list = json(&["catalog", "list"]);
    assert_eq!(list.as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn simulate_writes_replayable_transcripts() {
    let dir = std::env::temp_dir().join(format!("pursuit-sim-{}", std::process::id()));
    let args = [
        "simulate", "--graph", "catalog:mcgee", "--speed", "2", "--cops", "1",
        "--strategy", "random", "--seed", "5", "--max-rounds", "30",
        "--repeat", "3", "--jobs", "2", "--out-dir", dir.to_str().unwrap(),
    ];
    let mut with_json = vec!["--json"];
    with_json.extend_from_slice(&args);
    let o = pursuit(&with_json);
    assert!(o.status.success());
    let runs: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(runs.len(), 3);
    for (i, run) in runs.iter().enumerate() {
        assert_eq!(run["spec"]["seed"], 5 + i as u64);
        assert_eq!(run["verdict"]["kind"], "robber_survived");
        let path = dir.join(format!("run-{i:04}.json"));
        let r = pursuit(&["replay", path.to_str().unwrap()]);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    }
    // a single worker yields identical output
    let mut serial = with_json.clone();
    serial.retain(|a| *a != "--out-dir" && *a != dir.to_str().unwrap());
    let j = serial.iter().position(|a| *a == "--jobs").unwrap();
    serial[j + 1] = "1";
    assert_eq!(pursuit(&serial).stdout, o.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn play_reprompts_on_illegal_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args(["play", "--graph", "catalog:mcgee", "--speed", "2", "--max-rounds", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0\n17\nzz\n1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert_eq!(text.matches("illegal move; legal choices").count(), 1);
    assert!(text.contains("robber survived 2 rounds"));
}

#[test]
fn play_fails_when_input_ends() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args(["play", "--graph", "catalog:mcgee", "--speed", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdin.take());
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
