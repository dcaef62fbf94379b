use std::path::PathBuf;
use std::process::{Command, Output};

fn kscc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kscc")).args(args).output().expect("binary runs")
}

fn write_tmp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kscc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const BOWTIE: &str = "5 12\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n2 3\n2 4\n3 2\n3 4\n4 2\n4 3\n";

#[test]
fn vertex_components_as_text() {
    let path = write_tmp("bowtie.txt", BOWTIE);
    let out = kscc(&["kvscc", path.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "0 1 2 | 0->1 0->2 1->0 1->2 2->0 2->1\n2 3 4 | 2->3 2->4 3->2 3->4 4->2 4->3\n"
    );
}

#[test]
fn edge_components_and_sccs() {
    let path = write_tmp("bowtie2.txt", BOWTIE);
    let p = path.to_str().unwrap();
    assert_eq!(String::from_utf8(kscc(&["kescc", p]).stdout).unwrap(), "0 1 2 3 4\n");
    assert_eq!(String::from_utf8(kscc(&["kescc", p, "--k", "3"]).stdout).unwrap(), "0\n1\n2\n3\n4\n");
    assert_eq!(String::from_utf8(kscc(&["scc", p]).stdout).unwrap(), "0 1 2 3 4\n");
    assert_eq!(String::from_utf8(kscc(&["sparse2e", p]).stdout).unwrap(), "0 1 2 3 4\n");
}

#[test]
fn dimacs_input() {
    let path = write_tmp("c3.dimacs", "c triangle\np sp 3 3\na 1 2\na 2 3\na 3 1\n");
    let out = kscc(&["kescc", path.to_str().unwrap(), "--input-format", "dimacs"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0\n1\n2\n");
}

#[test]
fn trace_goes_to_stderr_as_json_lines() {
    let path = write_tmp("chain.txt", "7 18\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n2 3\n2 4\n3 2\n3 4\n4 2\n4 3\n4 5\n4 6\n5 4\n5 6\n6 4\n6 5\n");
    let out = kscc(&["kvscc", path.to_str().unwrap(), "--trace"]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(!stderr.is_empty());
    for line in stderr.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("event").is_some());
    }
}

#[test]
fn errors_are_structured() {
    let path = write_tmp("loop.txt", "3 1\n0 0\n");
    let out = kscc(&["kescc", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"], "Parse");
    assert!(v["message"].as_str().unwrap().contains("line 2"));

    let out = kscc(&["kescc", "/nonexistent/graph.txt"]);
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"], "Io");

    let path = write_tmp("ok.txt", BOWTIE);
    let out = kscc(&["kescc", path.to_str().unwrap(), "--k", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"], "InvalidOrder");
}

#[test]
fn generators_round_trip_through_files() {
    let out = kscc(&["gen", "chain", "--c", "2", "--b", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, BOWTIE);
    let out = kscc(&["gen", "random", "--n", "4", "--p", "1", "--seed", "1"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("4 12\n"));
}

#[test]
fn bench_reports_one_line_per_run() {
    let out = kscc(&["bench", "--sizes", "25", "--seeds", "4", "--algorithms", "kscc,naive"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|r| r.get("wall_ms").is_none()));
    assert!(lines.chunks(2).all(|p| p[0]["digest"] == p[1]["digest"]));

    let out = kscc(&["bench", "--algorithms", "kscc,sparse2e", "--k", "3"]);
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"], "Unsupported");
}
