//! End-to-end checks of the `sgut` binary: exit codes and output shape.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sgut(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sgut"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn compute_all_k_emits_one_row_per_k() {
    let out = sgut(&["compute", "--graph", "-"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["k"], 5);
    assert_eq!(rows[3]["sgut"], "128");
    assert_eq!(rows[0]["gut"], rows[0]["sgut"]);
    assert!(rows[1]["gut"].is_null());
}

#[test]
fn json_and_csv_carry_the_same_exact_values() {
    let args = ["bounds", "--graph", "-", "--k", "5", "--set", "thm32"];
    let j = json(&sgut(&[&args[..], &["--out", "json"]].concat(), "Dhc\n"));
    let c = sgut(&[&args[..], &["--out", "csv"]].concat(), "Dhc\n");
    assert_eq!(c.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(&c.stdout[..]);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows = j.as_array().unwrap();
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(&records) {
        for field in ["bound_id", "bound_value", "actual"] {
            assert_eq!(row[field].as_str().unwrap(), &rec[col(field)]);
        }
    }
}

#[test]
fn edge_list_input() {
    let out = sgut(
        &[
            "compute", "--graph", "-", "--format", "edgelist", "--k", "2",
        ],
        "n 4\n0 1\n1 2\n2 3\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows[0]["sgut"], "19");
    assert_eq!(rows[0]["sdd"], "28");
}

#[test]
fn exit_codes() {
    // disconnected complement: the bound is undefined
    let k3 = sgut(&["bounds", "--graph", "-", "--set", "ps"], "Bw\n");
    assert_eq!(k3.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&k3.stderr).contains("complement"));
    // malformed input and usage errors
    assert_eq!(
        sgut(&["compute", "--graph", "-"], "~~~\n").status.code(),
        Some(1)
    );
    assert_eq!(sgut(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(sgut(&["verify", "--n-max", "9"], "").status.code(), Some(1));
    // printed formulas disagree with computation
    assert_eq!(
        sgut(&["audit-formulas", "--n-max", "4"], "").status.code(),
        Some(2)
    );
    // prop21 holds on every connected graph of order 5
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let report = report.to_str().unwrap();
    let clean = sgut(
        &[
            "verify", "--n-max", "5", "--dedup", "--set", "prop21", "--out", report,
        ],
        "",
    );
    assert_eq!(
        clean.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&clean.stderr)
    );
    let reports: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 5);
}

#[test]
fn family_and_extremal() {
    let out = sgut(&["family", "--name", "cycle", "--n", "5"], "");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Dhc");
    let out = sgut(
        &[
            "extremal",
            "--n",
            "4",
            "--k",
            "4",
            "--objective",
            "min-sgut",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows[0]["value"], "9");
}
