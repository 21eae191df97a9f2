use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn recgraph(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recgraph")).args(args).current_dir(dir).output().expect("binary runs")
}

fn ok(args: &[&str], dir: &Path) -> String {
    let out = recgraph(args, dir);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str], dir: &Path) -> Value {
    serde_json::from_str(&ok(args, dir)).unwrap()
}

fn workdir() -> TempDir {
    let dir = TempDir::new().unwrap();
    let put = |name: &str, text: &str| fs::write(dir.path().join(name), text).unwrap();
    put("f.json", "[2]");
    put("g.json", "[5]");
    put("tri.json", r#"{"vertices":[0,1,2],"edges":[[0,1],[0,2],[1,2]]}"#);
    put("empty.json", r#"{"vertices":[],"edges":[]}"#);
    dir
}

#[test]
fn verify_block_lemma_k2() {
    let dir = workdir();
    let report = json(&["verify", "block-lemma", "--k", "2"], dir.path());
    assert_eq!(report["passed"], true);
    assert_eq!(report["command"], "verify block-lemma");
    assert!(report["notes"][0].as_str().unwrap().contains("4 proper"));
}

#[test]
fn verify_hamilton_range_with_flags() {
    let dir = workdir();
    let report = json(&["verify", "hamilton-range", "--trials", "50", "--window", "12"], dir.path());
    assert_eq!(report["passed"], true);
    assert_eq!(report["parameters"]["trials"], 50);
    assert_eq!(report["checked"], 500);
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = workdir();
    let run = |seed: &str| {
        let mut v = json(&["verify", "flip-gadget", "--trials", "3", "--seed", seed], dir.path());
        v["elapsed_ms"] = Value::Null;
        v.to_string()
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}

#[test]
fn unknown_suite_fails() {
    let dir = workdir();
    let out = recgraph(&["verify", "nope"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn dot_export() {
    let dir = workdir();
    let dot = ok(&["export", "dot", "tri.json"], dir.path());
    assert_eq!(dot.matches("--").count(), 3);
    assert_eq!(dot.lines().filter(|l| l.trim().ends_with(';') && !l.contains("--")).count(), 3);
    assert_eq!(ok(&["export", "dot", "empty.json"], dir.path()), "graph G {\n}\n");
    let gadget = ok(
        &["gadget", "flip", "--k", "2", "--f", "f.json", "--g", "g.json", "--steps", "1", "--format", "dot"],
        dir.path(),
    );
    assert!(gadget.contains("label=\"b0_0\"") && gadget.contains("label=\"2^1\""));
}

#[test]
fn flip_gadget_round_trip() {
    let dir = workdir();
    let p = dir.path();
    ok(
        &[
            "gadget",
            "flip",
            "--k",
            "2",
            "--f",
            "f.json",
            "--g",
            "g.json",
            "--steps",
            "1",
            "--spine",
            "3",
            "--out",
            "flip.json",
        ],
        p,
    );
    let found = json(&["oracle", "color", "flip.json", "--k", "3"], p);
    fs::write(p.join("chi.json"), found["coloring"].to_string()).unwrap();
    let decoded = json(&["decode", "flip", "--gadget", "flip.json", "--coloring", "chi.json"], p);
    let members: Vec<u64> = serde_json::from_value(decoded["set"]["members"].clone()).unwrap();
    assert!(members.contains(&2) && !members.contains(&5));
}

#[test]
fn block_gadget_round_trip() {
    let dir = workdir();
    let p = dir.path();
    fs::write(p.join("f1.json"), "[1]").unwrap();
    fs::write(p.join("g0.json"), "[0]").unwrap();
    ok(&["gadget", "blocks", "--k", "3", "--f", "f1.json", "--g", "g0.json", "--steps", "1", "--out", "b.json"], p);
    let found = json(&["oracle", "color", "b.json", "--k", "4"], p);
    fs::write(p.join("chi.json"), found["coloring"].to_string()).unwrap();
    let decoded = json(&["decode", "blocks", "--gadget", "b.json", "--coloring", "chi.json"], p);
    let members: Vec<u64> = serde_json::from_value(decoded["set"]["members"].clone()).unwrap();
    let (inside, outside) = if decoded["orientation"] == "row" { (1, 0) } else { (0, 1) };
    assert!(members.contains(&inside) && !members.contains(&outside));
}

#[test]
fn euler_gadget_pipeline() {
    let dir = workdir();
    let p = dir.path();
    fs::write(p.join("f13.json"), "[1,3]").unwrap();
    ok(&["gadget", "euler-range", "--f", "f13.json", "--steps", "2", "--window", "5", "--out", "e.json"], p);
    let run = json(&["euler", "online", "e.json", "--chunk", "3"], p);
    fs::write(p.join("trace.json"), run["trace"].to_string()).unwrap();
    let decoded = json(&["decode", "euler-range", "--gadget", "e.json", "--trace", "trace.json"], p);
    assert_eq!(decoded["set"]["members"], serde_json::json!([1, 3]));
    let least = json(&["euler", "leastcode", "e.json"], p);
    assert_eq!(least["vertices"][0], 0);
    let check = json(&["euler", "check", "e.json"], p);
    assert_eq!(check["verdict"], "consistent_so_far");
}

#[test]
fn online_coloring_emits_commit_lines() {
    let dir = workdir();
    let p = dir.path();
    let stream = "{\"bound\":{\"0\":1,\"1\":2,\"2\":3,\"3\":3}}\n{\"vertex\":0}\n{\"vertex\":1}\n{\"edge\":[1,0]}\n{\"vertex\":2}\n{\"edge\":[2,1]}\n{\"vertex\":3}\n{\"edge\":[3,2]}\n";
    fs::write(p.join("ray.jsonl"), stream).unwrap();
    let greedy = ok(&["color", "online", "--algo", "greedy", "ray.jsonl"], p);
    let colors: Vec<u64> =
        greedy.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()["color"].as_u64().unwrap()).collect();
    assert_eq!(colors, [0, 1, 0, 1]);
    let seamed = ok(&["color", "online", "--algo", "schmerl", "--k", "2", "ray.jsonl"], p);
    for line in seamed.lines() {
        let c: Value = serde_json::from_str(line).unwrap();
        assert!(c["color"].as_u64().unwrap() <= 2 && c.get("stage").is_some());
    }
    assert_eq!(seamed.lines().count(), 4);
}

#[test]
fn reduce_and_decide() {
    let dir = workdir();
    let p = dir.path();
    fs::create_dir(p.join("corpus")).unwrap();
    fs::write(p.join("two.json"), "[[0,0],[1,1]]").unwrap();
    fs::write(p.join("none.json"), r#"{"nodes":[[0]],"depth":2}"#).unwrap();
    ok(&["reduce", "tree", "--tree", "two.json", "--out", "corpus/a.jsonl"], p);
    ok(&["reduce", "tree", "--tree", "none.json", "--out", "corpus/b.jsonl"], p);
    let z = json(&["decide", "hamilton", "corpus"], p);
    assert_eq!(z["members"], serde_json::json!(["a.jsonl"]));
    let out = recgraph(&["decide", "unique-hamilton", "corpus"], p);
    assert!(!out.status.success(), "two branches give two Hamilton paths");
}

#[test]
fn clique_sequence_verdicts() {
    let dir = workdir();
    let p = dir.path();
    fs::write(p.join("g1.json"), "[1]").unwrap();
    ok(&["gadget", "clique-seq", "--g", "g1.json", "--i", "1", "--n", "5", "--out", "hit.json"], p);
    ok(&["gadget", "clique-seq", "--g", "g1.json", "--i", "2", "--n", "5", "--out", "miss.json"], p);
    let hit = json(&["decide", "colorability", "hit.json"], p);
    assert_eq!((hit["verdict"].as_str(), hit["chromatic_bound"].as_u64()), (Some("stopped"), Some(1)));
    let miss = json(&["decide", "colorability", "miss.json"], p);
    assert_eq!((miss["verdict"].as_str(), miss["clique_size"].as_u64()), (Some("growing"), Some(5)));
}

#[test]
fn hamilton_range_gadget_and_oracle() {
    let dir = workdir();
    let p = dir.path();
    fs::write(p.join("f3.json"), "[3]").unwrap();
    ok(&["gadget", "hamilton-range", "--f", "f3.json", "--n", "3", "--window", "6", "--out", "h.json"], p);
    let paths = json(&["oracle", "hamilton", "h.json", "--enumerate"], p);
    assert_eq!(paths["count"], 1);
    assert_eq!(paths["paths"][0]["vertices"], serde_json::json!([1, 0, 2, 3, 4, 5]));
    fs::write(p.join("t.json"), paths["paths"][0].to_string()).unwrap();
    let decoded = json(&["decode", "hamilton-range", "--gadget", "h.json", "--trace", "t.json"], p);
    assert_eq!(decoded["in_range"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = workdir();
    ok(&["oracle", "euler", "tri.json", "--out", "r.json"], dir.path());
    let report: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["path"]["vertices"], serde_json::json!([0, 1, 2, 0]));
}
