use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radial-hermite"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_records(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (
        header,
        lines
            .map(|l| l.split(',').map(String::from).collect())
            .collect(),
    )
}

/// Every CSV cell equals the matching JSON field, numerically where it parses as a number.
fn assert_same_table(csv: &str, json: &str) {
    let (header, rows) = csv_records(csv);
    let doc: Value = serde_json::from_str(json).unwrap();
    let json_rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), json_rows.len());
    for (row, obj) in rows.iter().zip(json_rows) {
        for (key, cell) in header.iter().zip(row) {
            let v = &obj[key.as_str()];
            match v {
                Value::Number(n) => {
                    assert_eq!(cell.parse::<f64>().unwrap(), n.as_f64().unwrap(), "{key}")
                }
                Value::String(s) => assert_eq!(cell, s, "{key}"),
                Value::Bool(b) => assert_eq!(cell, &b.to_string(), "{key}"),
                other => panic!("unexpected {key}: {other}"),
            }
        }
    }
}

#[test]
fn poly_json_example() {
    let out = run(&[
        "poly", "--r", "3", "--nu", "1", "--N", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["terms"], serde_json::json!([[0, "-2"], [6, "4"]]));
    assert_eq!(doc["N"], 6);
}

#[test]
fn poly_csv_matches_json() {
    let csv = stdout(&run(&["poly", "--r", "5", "--nu", "7/3", "--N", "23"]));
    let json = stdout(&run(&[
        "poly", "--r", "5", "--nu", "7/3", "--N", "23", "--format", "json",
    ]));
    let doc: Value = serde_json::from_str(&json).unwrap();
    let terms = doc["terms"].as_array().unwrap();
    let (header, rows) = csv_records(&csv);
    assert_eq!(header, ["degree", "coeff_num", "coeff_den"]);
    assert_eq!(rows.len(), terms.len());
    for (row, term) in rows.iter().zip(terms) {
        assert_eq!(row[0], term[0].to_string());
        let coeff = if row[2] == "1" {
            row[1].clone()
        } else {
            format!("{}/{}", row[1], row[2])
        };
        assert_eq!(coeff, term[1].as_str().unwrap());
    }
}

#[test]
fn spectrum_line_example() {
    let out = run(&["spectrum", "--r", "1", "--nu", "0", "--nmax", "4"]);
    assert!(out.status.success());
    let (header, rows) = csv_records(&stdout(&out));
    let col = header.iter().position(|h| h == "E_SUSY").unwrap();
    let energies: Vec<&str> = rows.iter().map(|r| r[col].as_str()).collect();
    assert_eq!(energies, ["0", "2", "2", "4", "4"]);
}

#[test]
fn tables_agree_across_formats() {
    for cmd in ["spectrum", "gram", "norms"] {
        let base = [cmd, "--r", "3", "--nu", "7/3", "--nmax", "9"];
        let csv = stdout(&run(&base));
        let json = stdout(&run(&[&base[..], &["--format", "json"]].concat()));
        assert_same_table(&csv, &json);
    }
    let base = [
        "eval",
        "--r",
        "5",
        "--nu",
        "1/2",
        "--N",
        "7",
        "--grid",
        "-1.5,1.5,7",
    ];
    assert_same_table(
        &stdout(&run(&base)),
        &stdout(&run(&[&base[..], &["--format", "json"]].concat())),
    );
}

#[test]
fn eval_default_grid_covers_every_line() {
    let out = run(&["eval", "--r", "3", "--nu", "1", "--N", "4"]);
    assert!(out.status.success());
    let (_, rows) = csv_records(&stdout(&out));
    assert_eq!(rows.len(), 3 * 201);
    assert_eq!(rows[0][1], "-2");
    assert_eq!(rows[200][1], "2");
    assert_eq!(rows[100][1], "0");
}

#[test]
fn norms_reports_deviation() {
    let out = run(&["norms", "--r", "5", "--nu", "1", "--nmax", "12"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.starts_with("max relative deviation:"), "{err}");
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn verify_reference_point_passes() {
    let out = run(&["verify", "--r", "5", "--nu", "1/2", "--nmax", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).count() >= 30);
    assert!(!text.contains("FAIL "));
}

#[test]
fn errata_lists_corrections() {
    let out = run(&["errata"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in ["recurrence-sign", "norm-closed-form", "susy-spectrum"] {
        assert!(text.contains(id), "{id}");
    }
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("radial-hermite-{}.csv", std::process::id()));
    let out = run(&[
        "spectrum",
        "--r",
        "1",
        "--nu",
        "0",
        "--nmax",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        written,
        stdout(&run(&["spectrum", "--r", "1", "--nu", "0", "--nmax", "4"]))
    );
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["gram", "--r", "3", "--nu", "1/2", "--nmax", "10"];
    let one = Command::new(env!("CARGO_BIN_EXE_radial-hermite"))
        .args(args)
        .env("RADIAL_HERMITE_THREADS", "1")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, run(&args).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_radial-hermite"))
        .args(args)
        .env("RADIAL_HERMITE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn parameter_violations_exit_one() {
    for args in [
        &["poly", "--r", "2", "--nu", "1", "--N", "3"][..],
        &["poly", "--r", "0", "--nu", "1", "--N", "3"],
        &["poly", "--r", "-3", "--nu", "1", "--N", "3"],
        &["gram", "--r", "3", "--nu", "-1/2"],
        &["gram", "--r", "3", "--nu", "one"],
        &[
            "eval", "--r", "3", "--nu", "1", "--N", "2", "--grid", "1,0,5",
        ],
        &["eval", "--r", "3", "--nu", "1", "--N", "2", "--grid", "0,1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["poly", "--r", "3", "--nu", "1"],
        &["spectrum", "--r", "3", "--nu", "1", "--flag"],
        &[],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "spectrum", "--r", "5", "--nu", "7/3", "--nmax", "20", "--format", "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
