use std::process::{Command, Output};

use matchroot::graph::parse_graph6;

fn matchroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchroot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary_of(report: &str) -> serde_json::Value {
    let last = report.lines().last().unwrap();
    serde_json::from_str::<serde_json::Value>(last).unwrap()["summary"].clone()
}

#[test]
fn poly_examples() {
    let o = matchroot(&["poly", "4; 0-1, 0-2, 0-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x^4 - 3x^2 = x^2 (x^2 - 3)\n"));
    let o = matchroot(&["poly", "Bw"]);
    assert!(stdout(&o).starts_with("x^3 - 3x"));
    let o = matchroot(&["poly", "2;"]);
    assert!(stdout(&o).starts_with("x^2\n"));
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        vec!["poly", "Bww"],
        vec!["poly", "3; 0-5"],
        vec!["classify", "Bw", "--root", "poly:-1,0,1"],
        vec!["classify", "Bw", "--root", "#9"],
        vec!["verify", "--max-n", "8"],
        vec!["verify", "--max-n", "3", "--lemmas", "no-such-lemma"],
        vec!["verify", "--corpus", "/nonexistent/corpus.g6"],
        vec!["frobnicate"],
    ] {
        let o = matchroot(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn classify_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("star.dot");
    let o = matchroot(&[
        "classify",
        "4; 0-1, 0-2, 0-3",
        "--root",
        "#0",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("  0 positive special\n  1 essential\n"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph root0 {"));
    assert_eq!(text.matches("fillcolor").count(), 4);
    assert_eq!(text.matches('{').count(), text.matches('}').count());
}

#[test]
fn decompose_reports_identity() {
    let o = matchroot(&["decompose", "4; 0-1, 0-2, 0-3", "--root", "#0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c(D) - |A| = 3 - 1 = 2 ok"));
}

#[test]
fn fixtures_feed_a_campaign() {
    let o = matchroot(&["fixtures"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "Bw"));
    for line in text.lines() {
        parse_graph6(line).unwrap();
    }
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("fixtures.g6");
    std::fs::write(&corpus, &text).unwrap();
    let out = dir.path().join("vt.jsonl");
    let o = matchroot(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--lemmas",
        "vertex-transitive-simple-roots,gallai",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&out).unwrap();
    let s = summary_of(&report);
    assert_eq!(s["graphs"], 20);
    let vt = &s["lemmas"]["vertex-transitive-simple-roots"];
    assert_eq!(vt["violations"], 0);
    assert_eq!(vt["not_applicable"], 0);
    assert_eq!(vt["holds"], s["pairs"]);
}

#[test]
fn injected_fault_is_reported() {
    let o = matchroot(&[
        "verify",
        "--max-n",
        "4",
        "--inject-fault",
        "--lemmas",
        "interlacing",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report = stdout(&o);
    let s = summary_of(&report);
    assert!(!s["violations"].as_array().unwrap().is_empty());
    let bad: serde_json::Value = report
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|v| v["verdict"] == "violated")
        .unwrap();
    assert!(!bad["witnesses"][0]["mults"].as_object().unwrap().is_empty());
    assert!(bad["graph6"].is_string());
    assert!(bad["root_coeffs"].is_array());
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let out = dir.path().join(format!("r{jobs}.jsonl"));
        let o = matchroot(&[
            "verify",
            "--max-n",
            "6",
            "--exploratory",
            "--jobs",
            jobs,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("1"), run("3"));
}
