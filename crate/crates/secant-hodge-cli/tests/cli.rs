//! End-to-end tests driving the built binary: golden records, exit codes,
//! output determinism and JSON round-trips.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secant-hodge"))
}

fn write_diamond(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write diamond");
    file
}

fn run_lines(diamond: &str, extra: &[&str]) -> Output {
    let file = write_diamond(diamond);
    bin()
        .arg("lines")
        .arg("--diamond")
        .arg(file.path())
        .args(extra)
        .output()
        .expect("run binary")
}

const P2: &str = r#"{"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]], "N": 9,
    "h11_rational": 1, "flags": {"qprime": 1, "u2": true}}"#;

#[test]
fn lines_p2_golden_document() {
    let output = run_lines(P2, &[]);
    assert!(output.status.success(), "{output:?}");
    let doc: Value = serde_json::from_slice(&output.stdout).expect("valid JSON");

    assert_eq!(doc["invariants"]["lcdef"], 0);
    assert_eq!(doc["invariants"]["c"], "inf");
    assert_eq!(doc["invariants"]["hrh"], 0);
    assert_eq!(doc["invariants"]["w"], 0);
    assert_eq!(doc["invariants"]["sigma"], 1);
    assert_eq!(doc["q_factoriality"]["sigma"], 1);
    assert_eq!(doc["q_factoriality"]["q_factorial"], false);
    assert_eq!(doc["generation_levels"]["ic_exact"], 0);
    assert_eq!(doc["generation_levels"]["h_q_exact"], 1);

    let lambda = doc["hodge_lyubeznik"]["lambda"].as_array().unwrap();
    assert!(lambda.is_empty());
    let ihl = doc["hodge_lyubeznik"]["intersection"].as_array().unwrap();
    assert_eq!(ihl.len(), 1);
    assert_eq!(ihl[0], serde_json::json!([3, -1, -1, 1]));

    let ih = doc["intersection_cohomology"].as_array().unwrap();
    let dims: Vec<(i64, i64)> = ih
        .iter()
        .map(|e| {
            let degree = e["degree"].as_i64().unwrap();
            let dim: i64 = e["classes"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c[2].as_i64().unwrap())
                .sum();
            (degree, dim)
        })
        .collect();
    assert_eq!(
        dims,
        vec![(0, 1), (2, 2), (4, 3), (6, 3), (8, 2), (10, 1)]
    );
}

#[test]
fn lines_genus3_curve() {
    let curve = r#"{"dim": 1, "h": [[1,3],[3,1]]}"#;
    let output = run_lines(curve, &[]);
    assert!(output.status.success(), "{output:?}");
    let doc: Value = serde_json::from_slice(&output.stdout).expect("valid JSON");
    // H^3 = Sym^2 H^1 of dimension g(2g+1) = 21
    let coh = doc["cohomology"].as_array().unwrap();
    let h3 = coh.iter().find(|e| e["degree"] == 3).unwrap();
    let dim: i64 = h3["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c[2].as_i64().unwrap())
        .sum();
    assert_eq!(dim, 21);
    // infinite Q-factoriality defect serializes as the string "inf"
    assert_eq!(doc["q_factoriality"]["sigma"], "inf");
}

#[test]
fn lines_rejects_malformed_diamond() {
    // conjugation symmetry broken
    let output = run_lines(r#"{"dim": 1, "h": [[1,0],[1,1]]}"#, &[]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("conjugation"), "{stderr}");

    let output = run_lines(r#"{"dim": 1"#, &[]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn lines_missing_h11_is_exit_3() {
    let k3 = r#"{"dim": 2, "h": [[1,0,1],[0,20,0],[1,0,1]]}"#;
    let output = run_lines(k3, &[]);
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("h11_rational"), "{stderr}");
}

#[test]
fn lines_output_is_deterministic_and_round_trips() {
    let first = run_lines(P2, &[]);
    let second = run_lines(P2, &[]);
    assert_eq!(first.stdout, second.stdout);

    // the document re-parses into the same typed record, byte-identically
    let report: secant_hodge_cli::report::LinesReport =
        serde_json::from_slice(&first.stdout).unwrap();
    let reserialized = format!("{}\n", serde_json::to_string_pretty(&report).unwrap());
    assert_eq!(reserialized.as_bytes(), &first.stdout[..]);

    let csv = run_lines(P2, &["--format", "csv"]);
    assert!(csv.status.success());
    assert!(String::from_utf8_lossy(&csv.stdout).starts_with("section,key,value"));
    let md = run_lines(P2, &["--format", "markdown"]);
    assert!(md.status.success());
    assert!(String::from_utf8_lossy(&md.stdout).contains("## Intersection cohomology"));
}

#[test]
fn curve_reports() {
    let output = bin()
        .args(["curve", "--genus", "0", "--k", "4"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["q_factoriality"]["rational_homology_manifold"], true);
    assert_eq!(doc["q_factoriality"]["q_factorial"], true);
    assert_eq!(doc["constant_sheaf"]["perverse"], true);

    let output = bin()
        .args(["curve", "--genus", "1", "--k", "3", "--N", "10"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["context"]["codim"], 5);
    assert_eq!(doc["generation_level"]["gl_bound"], 2);
    assert_eq!(doc["generation_level"]["vanishing_from"], 3);
    // the (j, w) = (5, 3) entry is Sym^3 H^1 of dimension 4
    let coh = doc["cohomology"].as_array().unwrap();
    let h5 = coh.iter().find(|e| e["degree"] == 5).unwrap();
    let weight3: i64 = h5["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c[0].as_i64().unwrap() + c[1].as_i64().unwrap() == 3)
        .map(|c| c[2].as_i64().unwrap())
        .sum();
    assert_eq!(weight3, 4);
}

#[test]
fn curve_rejects_k1() {
    let output = bin()
        .args(["curve", "--genus", "1", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_passes_and_fault_injection_fails() {
    let output = bin()
        .args(["verify", "--g-max", "1", "--k-max", "2", "--depth", "1"])
        .env("SECANT_HODGE_THREADS", "2")
        .output()
        .unwrap();
    assert!(output.status.success(), "{output:?}");
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("0 failed"));
    assert!(stdout.lines().all(|l| !l.starts_with("FAIL")));

    let output = bin()
        .args([
            "verify",
            "--g-max",
            "1",
            "--k-max",
            "2",
            "--depth",
            "1",
            "--inject-fault",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("FAIL injected-fault"), "{stdout}");
}

#[test]
fn plot_contains_figure_points() {
    let output = bin()
        .args(["plot", "--g", "10", "--k-max", "3"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8_lossy(&output.stdout);
    let points: Vec<(u32, i64, i64)> = stdout
        .lines()
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            assert_eq!(cols.len(), 4);
            (
                cols[0].parse().unwrap(),
                cols[1].parse().unwrap(),
                cols[2].parse().unwrap(),
            )
        })
        .collect();
    for (j, w) in [(5, 3), (6, 5), (6, 6), (7, 6), (7, 7), (8, 8), (9, 9)] {
        assert!(points.contains(&(3, j, w)), "missing sigma_3 point ({j},{w})");
    }
    for (j, w) in [(0, 0), (2, 2), (3, 2), (4, 4), (5, 5)] {
        assert!(points.contains(&(2, j, w)), "missing sigma_2 point ({j},{w})");
    }
}
