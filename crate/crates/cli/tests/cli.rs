use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tindex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tindex_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tindex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn indices_rows() {
    let star = stdout(&tindex(&["construct", "star", "--n", "5"]));
    let k23 = stdout(&tindex(&["construct", "kst", "--s", "2", "--t", "3"]));
    let input = format!("{star}{k23}");
    let out = tindex_stdin(&["indices", "--format", "json"], &input);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    let want = [(16, 22, 7, 1, 6, 1, 60), (14, 18, 8, 1, 6, 1, 56)];
    for (row, (w, ww, h, hd, c, cd, d)) in rows.iter().zip(want) {
        assert_eq!(row["W"], w);
        assert_eq!(row["WW"], ww);
        assert_eq!(
            (row["H_num"].clone(), row["H_den"].clone()),
            (h.into(), hd.into())
        );
        assert_eq!(
            (row["CEI_num"].clone(), row["CEI_den"].clone()),
            (c.into(), cd.into())
        );
        assert_eq!(row["EDS"], d);
    }
}

#[test]
fn indices_edge_cases() {
    let empty = tindex_stdin(&["indices"], "");
    assert!(empty.status.success());
    assert_eq!(stdout(&empty).lines().count(), 1);

    let bad = tindex_stdin(&["indices"], "Bw\nD Qc\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));

    let disconnected = tindex_stdin(&["indices", "--format", "json"], "A?\nBw\n");
    assert!(disconnected.status.success());
    let rows = json_lines(&disconnected);
    assert_eq!(rows[0]["error"], "graph is disconnected");
    assert_eq!(rows[1]["W"], 3);
}

#[test]
fn construct_outputs() {
    let bk = tindex(&[
        "construct",
        "bk",
        "--n",
        "5",
        "--k",
        "1",
        "--x",
        "2",
        "--format",
        "json",
    ]);
    let row = &json_lines(&bk)[0];
    assert_eq!(row["n"], 5);
    assert_eq!(row["bridges"], 1);

    let star = &json_lines(&tindex(&[
        "construct",
        "star",
        "--n",
        "5",
        "--format",
        "json",
    ]))[0];
    let kst = &json_lines(&tindex(&[
        "construct",
        "kst",
        "--s",
        "1",
        "--t",
        "4",
        "--format",
        "json",
    ]))[0];
    assert_eq!(star["certificate"], kst["certificate"]);

    let bad = tindex(&["construct", "bk", "--n", "7", "--k", "4", "--x", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("x <= n-k-x violated: 2 > 1"));
    let bad = tindex(&["construct", "bk", "--n", "7", "--k", "5", "--x", "1"]);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("k = n-2"));
}

#[test]
fn bound_rows() {
    let out = tindex(&[
        "bound", "--index", "w", "--n", "10", "--k", "4", "--format", "json",
    ]);
    let row = &json_lines(&out)[0];
    assert_eq!(row["value_num"], 82);
    assert_eq!(row["optimal_x"], "2");
    assert_eq!(row["clause"], "T6(ii)");
    assert_eq!(row["reconcile"], "match");

    let row = &json_lines(&tindex(&[
        "bound", "--index", "w", "--n", "11", "--k", "2", "--format", "json",
    ]))[0];
    assert_eq!(row["optimal_x"], "3;4");
    assert_eq!(row["family"], "B_2(3,6);B_2(4,5)");

    let row = &json_lines(&tindex(&[
        "bound", "--index", "ww", "--n", "20", "--k", "3", "--format", "json",
    ]))[0];
    assert_eq!(row["direction"], "lower-bound");
    assert!(row["reconcile"]
        .as_str()
        .unwrap()
        .contains("direction-conflict"));

    let bad = tindex(&["bound", "--n", "10", "--k", "8"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn csv_and_json_carry_the_same_data() {
    let csv = stdout(&tindex(&["table", "--n", "5..9", "--format", "csv"]));
    let json = json_lines(&tindex(&["table", "--n", "5..9", "--format", "json"]));
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mut rows = 0;
    let mut reader = csv_rows(&csv);
    reader.remove(0);
    for (cells, obj) in reader.iter().zip(&json) {
        rows += 1;
        for (h, c) in header.iter().zip(cells) {
            let v = &obj[*h];
            let text = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(&text, c, "column {h}");
        }
    }
    assert_eq!(rows, json.len());
}

/// Minimal CSV splitter for the quoted fields this tool writes.
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|line| {
            let mut cells = Vec::new();
            let mut cur = String::new();
            let mut quoted = false;
            for ch in line.chars() {
                match ch {
                    '"' => quoted = !quoted,
                    ',' if !quoted => cells.push(std::mem::take(&mut cur)),
                    c => cur.push(c),
                }
            }
            cells.push(cur);
            cells
        })
        .collect()
}

#[test]
fn closed_form_row() {
    let row = &json_lines(&tindex(&[
        "closed-form",
        "--index",
        "cei",
        "--n",
        "6",
        "--k",
        "1",
        "--x",
        "2",
        "--format",
        "json",
    ]))[0];
    assert_eq!(
        (row["value_num"].clone(), row["value_den"].clone()),
        (19.into(), 3.into())
    );
}

#[test]
fn enumeration_streams() {
    assert_eq!(
        stdout(&tindex(&["enumerate", "--n", "2"])).lines().count(),
        1
    );
    assert_eq!(
        stdout(&tindex(&["enumerate", "--n", "5", "--k", "4"]))
            .lines()
            .count(),
        3
    );
    let six = tindex(&["enumerate", "--n", "6", "--k", "3"]);
    assert!(six.status.success());
    assert_eq!(stdout(&six), "");
    let a = stdout(&tindex(&["enumerate", "--n", "8"]));
    assert_eq!(a.lines().count(), 182);
    assert_eq!(
        a,
        stdout(&tindex(&["enumerate", "--n", "8", "--workers", "1"]))
    );
    assert_eq!(tindex(&["enumerate", "--n", "10"]).status.code(), Some(2));
    assert_eq!(
        tindex(&["enumerate", "--n", "10", "--cap", "10", "--k", "9"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn verify_reports() {
    let out = tindex(&["verify", "--index", "w", "--n", "5..7"]);
    assert!(out.status.success());
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 2 + 3 + 4);
    for r in &reports {
        assert_eq!(r["verdict"], "match");
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(
            keys,
            [
                "n",
                "k",
                "index",
                "oracle_value",
                "oracle_extremal",
                "predicted_value",
                "predicted_extremal",
                "verdict"
            ]
        );
    }
    assert_eq!(
        stdout(&out),
        stdout(&tindex(&["verify", "--index", "w", "--n", "5..7"]))
    );

    let strict = tindex(&["verify", "--index", "eds", "--n", "5", "--strict"]);
    assert_eq!(strict.status.code(), Some(0));
    let timed = json_lines(&tindex(&["verify", "--index", "h", "--n", "5", "--timing"]));
    assert!(timed[0]["timing_ms"].is_number());

    let over = tindex(&["verify", "--n", "5..11"]);
    assert_eq!(over.status.code(), Some(2));
    assert!(over.stdout.is_empty());
}

#[test]
fn verify_resumes_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.jsonl");
    let p = path.to_str().unwrap();
    let first = tindex(&["verify", "--index", "h", "--n", "5..6", "--out", p]);
    assert_eq!(json_lines(&first).len(), 5);
    let second = tindex(&["verify", "--all", "--n", "5..6", "--out", p]);
    assert_eq!(json_lines(&second).len(), 20);
    let saved = std::fs::read_to_string(&path).unwrap();
    assert_eq!(saved.lines().count(), 25);
    let third = tindex(&["verify", "--all", "--n", "5..6", "--out", p, "--strict"]);
    assert!(third.status.success());
    assert!(third.stdout.is_empty());
}

#[test]
fn strict_verify_fails_on_recorded_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.jsonl");
    let p = path.to_str().unwrap();
    let out = tindex(&["verify", "--index", "w", "--n", "5", "--out", p]);
    assert!(out.status.success());
    let edited = std::fs::read_to_string(&path).unwrap().replacen(
        "\"verdict\":\"match\"",
        "\"verdict\":\"value-mismatch\"",
        1,
    );
    std::fs::write(&path, edited).unwrap();
    let strict = tindex(&["verify", "--index", "w", "--n", "5", "--out", p, "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn probes() {
    let out = tindex(&[
        "probe",
        "lemma4",
        "--s",
        "2",
        "--t",
        "2",
        "--pendants",
        "x1:1,x2:1",
        "--from",
        "x1",
        "--to",
        "x2",
        "--format",
        "json",
    ]);
    let rows = json_lines(&out);
    let delta = |tag: &str| {
        let r = rows.iter().find(|r| r["index"] == tag).unwrap();
        (
            r["delta_num"].as_i64().unwrap(),
            r["delta_den"].as_i64().unwrap(),
        )
    };
    assert_eq!(delta("W"), (-2, 1));
    assert_eq!(delta("WW"), (-7, 1));
    assert_eq!(delta("H"), (1, 4));
    assert!(rows.iter().all(|r| r["holds"] == true));

    let c6 = "EhEG";
    let out = tindex(&[
        "probe", "lemma2", "--graph", c6, "--format", "json", "--strict",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 5);
    assert!(rows
        .iter()
        .all(|r| r["holds"] == true && r["absent_edges"] == 9));

    let out = tindex(&[
        "probe", "lemma3", "--graph", "Ch", "--u", "1", "--w", "2", "--format", "json",
    ]);
    let rows = json_lines(&out);
    let s4 = stdout(&tindex(&["construct", "star", "--n", "4"]));
    let after = rows[0]["after"].as_str().unwrap();
    let certs = tindex_stdin(&["indices", "--format", "json"], &format!("{after}\n{s4}"));
    let c = json_lines(&certs);
    assert_eq!(c[0]["W"], c[1]["W"]);
    assert_eq!(c[0]["EDS"], c[1]["EDS"]);

    let out = tindex(&[
        "probe",
        "lemma5",
        "--s",
        "2",
        "--t",
        "3",
        "--pendants",
        "x1:1,y1:2",
        "--from",
        "y1",
        "--to",
        "x1",
        "--format",
        "json",
    ]);
    let rows = json_lines(&out);
    let cei = rows.iter().find(|r| r["index"] == "CEI").unwrap();
    assert_eq!(
        (cei["delta_num"].clone(), cei["delta_den"].clone()),
        (2.into(), 3.into())
    );

    let bad = tindex(&[
        "probe",
        "lemma4",
        "--s",
        "2",
        "--t",
        "2",
        "--pendants",
        "x1:1,y1:1",
        "--from",
        "x1",
        "--to",
        "y1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(tindex(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        tindex(&["bound", "--n", "ten", "--k", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(tindex(&["table", "--n", "9..5"]).status.code(), Some(1));
    assert_eq!(
        tindex(&["table", "--n", "5", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(tindex(&["--help"]).status.code(), Some(0));
}
