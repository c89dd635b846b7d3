use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn monogen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogen")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    monogen(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(monogen(args).stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn analyze_examples() {
    assert_eq!(code(&["analyze", "x^3 - x - 1"]), 0);
    let v = json(&["analyze", "x^3 - x - 1"]);
    assert_eq!(v["verdict"]["kind"], "MonogenicPoly");

    assert_eq!(code(&["analyze", "x^2 - 5"]), 0);
    let v = json(&["analyze", "x^2 - 5"]);
    assert_eq!(v["verdict"]["kind"], "NotMonogenicPoly");
    let row = &v["ledger"][0];
    assert_eq!(row["p"], "2");
    assert_eq!(row["nu_index"]["kind"], "Exact");
    assert_eq!(row["nu_index"]["value"], 1);
    assert_eq!(v["field_discriminant"], "5");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&["analyze", "x^"]), 2);
    assert_eq!(code(&["analyze", "2x^2 + 1"]), 2);
    assert_eq!(code(&["analyze", "x^4 + 2x^2 + 1"]), 2);
    assert_eq!(code(&["polygon", "x^2 - 2", "-p", "4"]), 2);
    assert_eq!(code(&["polygon", "x^3 - 2", "-p", "5", "--phi", "x^2 + 1"]), 2);
    assert_eq!(code(&["dedekind", "x^2 - 2", "-p", "1"]), 2);
    assert_eq!(code(&["quartic", "x^3 - 2", "-m", "1"]), 2);
    assert_eq!(code(&["corpus", "nosuch"]), 2);
    assert_eq!(code(&["corpus", "xn-x-1", "--n", "9..2"]), 2);
    assert_eq!(code(&["analyze", "x^2 - 5", "--bound", "0"]), 2);
}

#[test]
fn parse_error_reports_position() {
    let out = monogen(&["analyze", "x^2 + * 3"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 6"), "{err}");
    let v = json(&["analyze", "x^"]);
    assert_eq!(v["schema"], "monogen.error/1");
}

#[test]
fn inconclusive_exits_1() {
    // x^2 + 16 is not 2-regular: the residual polynomial is (y + 1)^2
    assert_eq!(code(&["polygon", "x^2 + 16", "-p", "2"]), 1);
    let v = json(&["polygon", "x^2 + 16", "-p", "2"]);
    assert_eq!(v["index_valuation"]["kind"], "LowerBound");
}

#[test]
fn polygon_examples() {
    let v = json(&["polygon", "x^2 - 5", "-p", "2"]);
    let phi = &v["phis"][0];
    assert_eq!(phi["sides"].as_array().unwrap().len(), 1);
    assert_eq!(phi["sides"][0]["slope"], "-1/1");
    assert_eq!(phi["phi_index"], 1);
    assert_eq!(phi["sides"][0]["residual"], "y^2 + y + 1");
    assert_eq!(phi["sides"][0]["residual_factors"].as_array().unwrap().len(), 1);

    let v = json(&["polygon", "x^2 - 2", "-p", "2"]);
    assert_eq!(v["phis"][0]["sides"][0]["slope"], "-1/2");
    assert_eq!(v["phis"][0]["phi_index"], 0);

    let text = stdout(&["polygon", "x^2 - 2", "-p", "2"]);
    assert!(text.contains("   1 | #    "), "{text}");

    let v = json(&["polygon", "x^3 - x^2 - 2x - 8", "-p", "2", "--phi", "x"]);
    assert_eq!(v["phis"].as_array().unwrap().len(), 1);
    assert!(v["index_valuation"].is_null());
}

#[test]
fn quartic_examples() {
    let v = json(&["quartic", "x^4 - 2", "-m", "1", "--bound", "200"]);
    let sols: Vec<Vec<String>> = v["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["xyz"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect())
        .collect();
    assert_eq!(sols, vec![vec!["1", "0", "0"], vec!["1", "-1", "1"], vec!["1", "1", "1"]]);
    assert!(v["solutions"].as_array().unwrap().iter().all(|s| s["oracle_ok"] == true));

    let v = json(&["quartic", "x^4 + 1", "-m", "1", "--bound", "100"]);
    let has = v["solutions"].as_array().unwrap().iter().any(|s| s["xyz"] == serde_json::json!(["1", "0", "0"]));
    assert!(has);
}

#[test]
fn corpus_sweeps() {
    assert_eq!(code(&["corpus", "xn-x-1", "--n", "2..9"]), 0);
    let v = json(&["corpus", "binomial12", "--m", "-50..50"]);
    assert_eq!(v["summary"]["mismatches"], 0);
    assert_eq!(v["summary"]["total"], 60);
    let labels: Vec<&str> = v["instances"].as_array().unwrap().iter().map(|i| i["label"].as_str().unwrap()).collect();
    assert_eq!(labels[0], "m=-47");
    assert_eq!(*labels.last().unwrap(), "m=47");
}

#[test]
fn json_is_deterministic() {
    for args in [
        vec!["--json", "analyze", "x^6 + 2x^2 + 2"],
        vec!["--json", "corpus", "binomial12", "--m", "-20..20"],
        vec!["--json", "quartic", "x^4 - 2", "--bound", "100"],
    ] {
        let a = monogen(&args).stdout;
        let b = monogen(&args).stdout;
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn golden_files() {
    let cases: [(&str, &[&str]); 5] = [
        ("analyze_x2m5.json", &["--json", "analyze", "x^2 - 5"]),
        ("polygon_x2m5_p2.json", &["--json", "polygon", "x^2 - 5", "-p", "2"]),
        ("quartic_x4m2.json", &["--json", "quartic", "x^4 - 2", "-m", "1", "--bound", "200"]),
        ("corpus_xn_x_1.json", &["--json", "corpus", "xn-x-1", "--n", "2..9"]),
        ("dedekind_cubic_p2.json", &["--json", "dedekind", "x^3 - x^2 - 2x - 8", "-p", "2"]),
    ];
    for (file, args) in cases {
        assert_eq!(stdout(args), golden(file), "{file}");
    }
}
