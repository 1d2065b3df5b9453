use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn toralg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toralg"))
        .args(args)
        .env_remove("TORALG_BOUND")
        .env_remove("TORALG_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = toralg(&full);
    let v: Value =
        serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

#[test]
fn generator_report() {
    let (v, code) = json(&["gen", "(1+sqrt(7))/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["generator"].to_string(), "[[5,9],[6,11]]");
    let text = stdout(&toralg(&["gen", "sqrt(7)"]));
    assert!(text.contains("generator: [[8,3],[21,8]]"), "{text}");
}

#[test]
fn pell_big_values_are_exact() {
    let (v, code) = json(&["pell", "661", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["x"].to_string(), "16421658242965910275055840472270471049");
    let (v, _) = json(&["pell", "7", "-1"]);
    assert_eq!(v["solvable"], false);
}

#[test]
fn isomorphism_verdicts() {
    let (v, code) = json(&["iso", "sqrt(5)", "2+sqrt(5)"]);
    assert_eq!((v["isomorphic"].clone(), code), (Value::Bool(true), 0));
    assert_eq!(v["witness"].to_string(), "[[1,0],[-2,1]]");
    let (v, code) = json(&["iso", "sqrt(5)", "(1+sqrt(5))/2"]);
    assert_eq!((v["isomorphic"].clone(), code), (Value::Bool(false), 0));
    let text = stdout(&toralg(&["aut-iso", "sqrt(5)", "(1+sqrt(5))/2"]));
    assert!(text.contains("verdict: no"), "{text}");
    assert!(text.contains("trace 4 vs 1"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(toralg(&["gen", "sqrt(4)"]).status.code(), Some(1));
    assert_eq!(toralg(&["gen", "sqrt(2"]).status.code(), Some(1));
    assert_eq!(toralg(&["pell", "9", "1"]).status.code(), Some(1));
    assert_eq!(toralg(&["pell", "7", "3"]).status.code(), Some(1));
    assert_eq!(
        toralg(&["--bound", "0", "gen", "sqrt(2)"]).status.code(),
        Some(1)
    );
    assert_eq!(toralg(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(toralg(&["--help"]).status.code(), Some(0));
    assert_eq!(
        toralg(&["check", "sqrt(5)", "[[9,4],[20,9]]"])
            .status
            .code(),
        Some(0)
    );
    // a bounded search that comes up empty is not a definite answer
    let o = toralg(&[
        "aut-iso",
        "(2+sqrt(11))/3",
        "(2+sqrt(11))/3",
        "--bound",
        "5",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "the identity conjugates a generator to itself"
    );
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("corpus.txt");
    std::fs::write(&file, "(2+sqrt(11))/3\n").unwrap();
    assert_eq!(
        toralg(&["conjecture", file.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn syntax_errors_point_at_the_offset() {
    let o = toralg(&["gen", "1+sqrt(5"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains('^'), "{err}");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json", "corpus", "--u-max", "2", "--v-max", "2", "--w-max", "2", "--d-max", "7",
    ];
    assert_eq!(stdout(&toralg(&args)), stdout(&toralg(&args)));
    let (v, _) = json(&[
        "corpus", "--u-max", "0", "--v-max", "1", "--w-max", "1", "--d-max", "7",
    ]);
    assert_eq!(
        v["results"].to_string(),
        r#"["sqrt(2)","sqrt(3)","sqrt(5)","sqrt(6)","sqrt(7)"]"#
    );
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("pell.txt");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_toralg"))
            .args(["gen", "sqrt(61)"])
            .env("TORALG_CACHE", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let stored = std::fs::read_to_string(&cache).unwrap();
    assert!(stored.lines().any(|l| l.starts_with("61 ")), "{stored}");
    assert_eq!(stdout(&run()), stdout(&first));
}

#[test]
fn polynomial_commands() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    std::fs::write(&f, "# test\n0 0 1 0\n1 1 0.5 -0.5\n2 -1 0.25 0\n").unwrap();
    let p = f.to_str().unwrap();
    let (v, _) = json(&["poly", "member", p, "sqrt(2)"]);
    assert_eq!(v["member"], true);
    let (v, _) = json(&["poly", "member", p, "sqrt(5)"]);
    assert_eq!(v["member"], false);
    let mapped = stdout(&toralg(&[
        "poly",
        "map",
        p,
        "[[1,0],[1,1]]",
        "--angles",
        "0.25,0",
    ]));
    assert!(mapped.contains("2 1 0.5 0.5"), "{mapped}");
    let (v, _) = json(&["poly", "measure", p, "sqrt(2)", "--terms", "4"]);
    for c in v["convergents"].as_array().unwrap() {
        if c["past_threshold"] == true {
            assert_eq!(c["mu_k"], c["mu"]);
        }
    }
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 0 1\n").unwrap();
    assert_eq!(
        toralg(&["poly", "member", bad.to_str().unwrap(), "sqrt(2)"])
            .status
            .code(),
        Some(1)
    );
    assert!(Path::new(p).exists());
}
