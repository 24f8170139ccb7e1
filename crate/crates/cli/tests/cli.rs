use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

const R0: &str = "atoms: p q\n0: 11\n1: 01 10\n2: 00\n";

fn rankrev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankrev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn r0_file() -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("R0.rnk");
    fs::write(&path, R0).unwrap();
    (dir, path.to_str().unwrap().to_string())
}

#[test]
fn revise_prints_theory_and_severity() {
    let (_dir, r0) = r0_file();
    let o = rankrev(&["revise", "--rank", &r0, "--theory", "!q", "--phi", "q"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p & q [severe]\n");

    let o = rankrev(&["revise", "--rank", &r0, "--theory", "p", "--phi", "q"]);
    assert_eq!(stdout(&o), "p & q [mild]\n");
    let o = rankrev(&["revise", "--rank", &r0, "--theory", "bot", "--phi", "true"]);
    assert_eq!(stdout(&o), "p & q [severe]\n");
}

#[test]
fn check_passes_k1_to_k9() {
    let (_dir, r0) = r0_file();
    let o = rankrev(&[
        "check",
        "--rank",
        &r0,
        "--postulates",
        "K1..K9",
        "--atoms",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("domain: 16 theories x 16 formula classes"));
    assert!(text.ends_with("9 of 9 postulates pass\n"), "{text}");
}

#[test]
fn check_reports_violations_with_exit_one() {
    let (_dir, r0) = r0_file();
    let o = rankrev(&[
        "check",
        "--rank",
        &r0,
        "--postulates",
        "K2,U8_1,C2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = report.as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0]["verdict"], "pass");
    assert_eq!(entries[1]["postulate"], "U8_1");
    assert_eq!(entries[1]["witness"]["Kprime"], "bot");
    assert_eq!(entries[2]["witness"]["psi"], "false");
    assert!(entries
        .iter()
        .all(|e| e["mode"] == "exhaustive" && e.get("seed").is_none()));
}

#[test]
fn sampled_mode_is_reproducible() {
    let args = [
        "check",
        "--rank",
        "paris",
        "--postulates",
        "P_GEN,C1",
        "--mode",
        "sampled",
        "--seed",
        "11",
        "--samples",
        "300",
        "--json",
    ];
    let (a, b) = (rankrev(&args), rankrev(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report[0]["seed"], 11);
    assert_eq!(report[0]["mode"], "sampled");
}

#[test]
fn conservative_extension_check() {
    let o = rankrev(&[
        "check",
        "--rank",
        "r0",
        "--anchor",
        "!q",
        "--postulates",
        "K1..K9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_and_domain_errors_exit_two() {
    let (_dir, r0) = r0_file();
    for args in [
        vec![
            "revise",
            "--rank",
            r0.as_str(),
            "--theory",
            "!x",
            "--phi",
            "q",
        ],
        vec!["revise", "--rank", r0.as_str(), "--theory", "!q"],
        vec!["check", "--rank", r0.as_str(), "--atoms", "3"],
        vec!["check", "--rank", r0.as_str(), "--postulates", "K10"],
        vec!["check", "--rank", "paris", "--postulates", "K7"],
        vec![
            "revise",
            "--rank",
            "/nonexistent.rnk",
            "--theory",
            "p",
            "--phi",
            "q",
        ],
        vec!["enumerate", "--atoms", "4"],
        vec!["frobnicate"],
    ] {
        let o = rankrev(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_rank_file_is_reported_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.rnk");
    fs::write(&path, "atoms: p q\n0: 11\n1: 01 1x\n").unwrap();
    let o = rankrev(&["roundtrip", "--rank", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn trace_lists_each_step() {
    let o = rankrev(&[
        "trace", "--rank", "r0", "--theory", "!q", "--phi", "p", "--phi", "q",
    ]);
    assert_eq!(
        stdout(&o),
        "(!p & !q) | (p & !q) * p => p & !q [mild]\np & !q * q => p & q [severe]\n"
    );
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout(&rankrev(&["enumerate", "--atoms", "1"])),
        "0 1\n0 < 1\n1 < 0\n"
    );
    assert_eq!(
        stdout(&rankrev(&["enumerate", "--atoms", "p,q", "--count"])),
        "75\n"
    );
    let o = rankrev(&["enumerate", "--atoms", "2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ranks"].as_array().unwrap().len(), 75);
    assert_eq!(v["ranks"][74], serde_json::json!([3, 2, 1, 0]));
}

#[test]
fn witnesses() {
    let o = rankrev(&["witness", "--rank", "r0", "--kind", "u8_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("U8_1 K=!p & !q K'=bot phi=true observed=!p & !q"));

    let o = rankrev(&["witness", "--rank", "r0", "--kind", "c2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["psi"], "false");
    assert_eq!(v["witness"]["observed"], "p & q");

    let o = rankrev(&[
        "witness",
        "--rank",
        "r0",
        "--kind",
        "underdetermination",
        "--theory",
        "p & q",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = rankrev(&[
        "witness",
        "--rank",
        "r0",
        "--kind",
        "underdetermination",
        "--theory",
        "bot",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not found"));
}

#[test]
fn roundtrip_reproduces_the_file() {
    let (_dir, r0) = r0_file();
    let o = rankrev(&["roundtrip", "--rank", &r0]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(R0), "{text}");
    assert!(text.ends_with("round trip: identical\n"));
}

#[test]
fn paris_example() {
    let o = rankrev(&["example", "paris"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(
        lines[2..],
        [
            "c & rp & ro * !c => !c & !rp & !ro [severe]",
            "c & rp & ro * c => c & rp & ro [mild]",
            "bot * !c => !c & !rp & !ro [severe]",
        ]
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "--rank", "r0", "--postulates", "all", "--json"];
    assert_eq!(rankrev(&args).stdout, rankrev(&args).stdout);
}
