use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const TWO_POLY: &str = "field 7\nvars x,y\norder grevlex\npolys:\nx^2-1\nx*y-1\n";

fn siggb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siggb"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stats_line(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(text.lines().last().unwrap()).unwrap()
}

#[test]
fn two_poly_run_matches_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "two.txt", TWO_POLY);
    let out = siggb(&["run", &file, "--oracle", "--verify-vectors"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..2], ["1*x + 6*y", "1*y^2 + 6"]);
    let stats = stats_line(&out);
    assert_eq!(stats["reduced_gb_size"], 2);
    assert_eq!(stats["oracle_match"], true);
    assert_eq!(stats["vector_check_failures"], 0);
}

#[test]
fn stats_record_has_counter_keys_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("stats.jsonl");
    let out = siggb(&[
        "bench",
        "katsura",
        "4",
        "--criterion",
        "f5",
        "--strategy",
        "deg",
        "--stats-json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&json).unwrap();
    assert_eq!(text.lines().count(), 1);
    let keys = [
        "pairs_generated",
        "rejected_nonregular",
        "rejected_criterion",
        "reduced",
        "zero_reductions",
        "basis_nonzero",
        "reduced_gb_size",
        "elapsed_ms",
    ];
    let mut last = 0;
    for k in keys {
        let at = text
            .find(&format!("\"{k}\""))
            .unwrap_or_else(|| panic!("missing {k}"));
        assert!(at >= last, "{k} out of order");
        last = at;
    }
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["reduced_gb_size"], 13);
    assert_eq!(v["config"], "f5/deg/schreyer/full");
}

#[test]
fn identical_runs_print_identical_bytes() {
    let args = ["bench", "cyclic", "4", "--no-timing"];
    let a = siggb(&args);
    let b = siggb(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stats_line(&a)["elapsed_ms"], 0);
}

#[test]
fn criteria_agree_on_the_basis() {
    let mut bases = Vec::new();
    for c in ["f5", "ratio", "gvw", "none"] {
        let out = siggb(&[
            "bench",
            "cyclic",
            "4",
            "--criterion",
            c,
            "--oracle",
            "--no-timing",
        ]);
        assert_eq!(out.status.code(), Some(0), "{c}");
        let text = String::from_utf8(out.stdout).unwrap();
        let basis: Vec<String> = text
            .lines()
            .filter(|l| !l.starts_with('{'))
            .map(str::to_string)
            .collect();
        bases.push(basis);
    }
    assert!(bases.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn parse_errors_and_bad_usage_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.txt",
        "field 7\nvars x,y\norder grevlex\npolys:\nx^^2\n",
    );
    let out = siggb(&["run", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));

    let missing = siggb(&["run", dir.path().join("absent.txt").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(
        siggb(&["bench", "katsura", "4", "--criterion", "nonsense"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(siggb(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cap_exits_3() {
    let out = siggb(&["bench", "katsura", "4", "--cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn table_lists_each_criterion() {
    let out = siggb(&["table", "--system", "cyclic4", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for c in ["f5/", "ratio/", "gvw/"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with("cyclic4") && l.contains(c)),
            "{text}"
        );
    }
}
