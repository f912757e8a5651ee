//! End-to-end tests of the command-line interface: output formats,
//! determinism, and exit codes.

use std::process::{Command, Output};

fn orbichar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbichar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = orbichar(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn census_values_match_published_numbers() {
    let text = stdout(&["census", "S4", "--p", "2", "--n", "1"]);
    assert!(text.starts_with("4 orbits"), "{text}");
    let text = stdout(&["census", "D8", "--p", "2", "--n", "2"]);
    assert!(text.starts_with("22 orbits"), "{text}");
    let text = stdout(&["census", "C1", "--p", "2", "--n", "5"]);
    assert!(text.starts_with("1 orbits"), "{text}");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["chi", "cells", "soule_sl3", "--p", "2", "--n", "1..3"],
        vec!["census", "S4", "--p", "2", "--n", "2", "--reps"],
        vec!["burnside", "D8 + D8 - C4", "--p", "2", "--n", "1..2"],
        vec!["verify", "--filter", "soule"],
    ] {
        let first = orbichar(&args);
        let second = orbichar(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status, second.status, "{args:?}");
    }
}

/// The published table schema: an object with exactly `columns` (strings)
/// and `rows` (arrays of strings, one cell per column).
fn assert_matches_table_schema(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let value: serde_json::Value = serde_json::from_str(text).expect("valid JSON");
    let object = value.as_object().expect("top-level object");
    assert_eq!(object.len(), 2, "exactly columns and rows");
    let columns: Vec<String> = object["columns"]
        .as_array()
        .expect("columns array")
        .iter()
        .map(|c| c.as_str().expect("string column").to_string())
        .collect();
    let rows: Vec<Vec<String>> = object["rows"]
        .as_array()
        .expect("rows array")
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .as_array()
                .expect("row array")
                .iter()
                .map(|c| c.as_str().expect("string cell").to_string())
                .collect();
            assert_eq!(cells.len(), columns.len(), "row width");
            cells
        })
        .collect();
    (columns, rows)
}

fn parse_csv(text: &str) -> Vec<Vec<String>> {
    // The suite only emits cells without embedded commas or quotes.
    text.lines()
        .map(|line| line.split(',').map(|c| c.to_string()).collect())
        .collect()
}

#[test]
fn json_and_csv_encode_identical_values() {
    for args in [
        vec!["census", "S4", "--p", "2", "--n", "1"],
        vec!["chi", "burnside", "S3", "--p", "3", "--n", "1..3"],
        vec!["coxeter"],
    ] {
        let mut args = args;
        if args == ["coxeter"] {
            let path = std::env::temp_dir().join("orbichar_cli_pentagon.txt");
            std::fs::write(&path, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
            args = vec![
                "coxeter",
                Box::leak(path.display().to_string().into_boxed_str()),
            ];
        }
        let mut json_args = args.clone();
        json_args.push("--json");
        let mut csv_args = args.clone();
        csv_args.push("--csv");

        let (columns, rows) = assert_matches_table_schema(&stdout(&json_args));
        let csv = parse_csv(&stdout(&csv_args));
        assert_eq!(csv[0], columns, "{args:?}");
        assert_eq!(&csv[1..], rows.as_slice(), "{args:?}");
    }
}

#[test]
fn chi_tables_render_the_chromatic_sequence() {
    let path = std::env::temp_dir().join("orbichar_cli_pentagon2.txt");
    std::fs::write(&path, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let text = stdout(&["chi", "coxeter", path.to_str().unwrap(), "--n", "0..2"]);
    assert!(text.contains("-1 (orbifold)  -1/4"), "{text}");
    assert!(text.contains("0 (rational)   1"), "{text}");
    assert!(text.contains("1              11"), "{text}");
    assert!(text.contains("2              61"), "{text}");
}

#[test]
fn cells_json_round_trips_through_a_file() {
    let json = stdout(&["cells", "soule_sl3", "--json"]);
    let path = std::env::temp_dir().join("orbichar_cli_soule.json");
    std::fs::write(&path, &json).unwrap();
    let table = stdout(&[
        "chi",
        "cells",
        path.to_str().unwrap(),
        "--p",
        "2",
        "--n",
        "1..2",
    ]);
    assert!(table.contains("1              5"), "{table}");
    assert!(table.contains("2              25"), "{table}");
}

#[test]
fn exit_codes() {
    // 0: success.
    assert_eq!(
        orbichar(&["census", "S3", "--p", "2", "--n", "1"])
            .status
            .code(),
        Some(0)
    );
    // 2: usage errors (bad spec, composite modulus, unknown family).
    assert_eq!(
        orbichar(&["census", "Z9", "--p", "2", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        orbichar(&["census", "S3", "--p", "4", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        orbichar(&["chi", "closed-form", "nonsense", "--p", "5"])
            .status
            .code(),
        Some(2)
    );
    // 1: computation limits and undefined heights.
    assert_eq!(
        orbichar(&["census", "C2xC2xC2xC2xC2xC2xC2xC2", "--p", "2", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        orbichar(&["chi", "closed-form", "gl", "--p", "5", "--n=-1..1"])
            .status
            .code(),
        Some(1)
    );
    // 3: verification failures (an empty filter passes nothing).
    assert_eq!(
        orbichar(&["verify", "--filter", "no-such-tag"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_subcommand_passes_on_fast_criteria() {
    for tag in ["census", "soule", "amalgam", "closed-form", "coxeter"] {
        let out = orbichar(&["verify", "--filter", tag]);
        assert_eq!(out.status.code(), Some(0), "verify --filter {tag}");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("[ pass ]"), "{text}");
        assert!(text.contains(", 0 failed"), "{text}");
    }
}

#[test]
fn report_lists_summands() {
    let text = stdout(&["report", "group", "S4", "--p", "2", "--n", "1"]);
    assert!(text.contains("4 summands"), "{text}");
    let text = stdout(&["report", "gl", "--p", "5", "--n", "1"]);
    assert!(text.contains("(L + L[1])^x1"), "{text}");
    let text = stdout(&["report", "sp", "--p", "5", "--n", "1"]);
    assert!(text.contains("C5 x C2"), "{text}");
}
