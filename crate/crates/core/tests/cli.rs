//! End-to-end runs of the `cliffroots` binary.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn cliffroots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffroots"))
        .args(args)
        .env_remove("CLIFFROOTS_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cliffroots(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stdout));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

/// Root rows of a `roots` CSV without the index column.
fn root_rows(csv: &str) -> BTreeSet<String> {
    csv.lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.to_string())
        .collect()
}

#[test]
fn h3_roots_csv() {
    let csv = stdout(&["roots", "--system", "H3"]);
    assert_eq!(csv.lines().count(), 31);
    assert_eq!(csv.lines().next(), Some("index,coord1,coord2,coord3"));
}

#[test]
fn e8_json_carries_the_cartan_matrix() {
    let v = json(&["e8-from-h3", "--format", "json"]);
    let entries: Vec<Vec<String>> = serde_json::from_value(v["cartan"]["entries"].clone()).unwrap();
    let mut want = vec![vec!["0".to_string(); 8]; 8];
    for (i, row) in want.iter_mut().enumerate() {
        row[i] = "2".into();
    }
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        want[i][j] = "-1".into();
        want[j][i] = "-1".into();
    }
    assert_eq!(entries, want);
    assert_eq!(v["e8_roots"], 240);
    assert_eq!(v["closure_matches"], true);
}

#[test]
fn e8_factorisation_exponents() {
    let v = json(&["coxeter", "--system", "E8-cl8", "--factorize"]);
    let ex: Vec<u32> = serde_json::from_value(v["exponents"].clone()).unwrap();
    assert_eq!(ex, vec![1, 7, 11, 13, 17, 19, 23, 29]);
    assert_eq!(v["h"], 30);
    assert_eq!(v["planes"].as_array().unwrap().len(), 4);
}

#[test]
fn e8_svg_has_eight_rings_of_thirty() {
    let svg = stdout(&["project", "--system", "E8-cl8", "--format", "svg"]);
    assert_eq!(svg.matches("data-root=").count(), 240);
    assert_eq!(svg.matches(r#"<circle cx="0" cy="0""#).count(), 8);
    assert!(svg.starts_with("<?xml"));
}

#[test]
fn a4_svg_has_two_rings_in_golden_ratio() {
    let svg = stdout(&["project", "--system", "A4", "--format", "svg"]);
    let radii: Vec<f64> = svg
        .lines()
        .filter(|l| l.contains(r#"<circle cx="0" cy="0""#))
        .map(|l| l.split("r=\"").nth(1).unwrap().split('"').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(radii.len(), 2);
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((radii[1] / radii[0] - tau).abs() < 1e-5, "{radii:?}");
}

#[test]
fn projection_csv_on_an_eigenplane() {
    let csv = stdout(&["project", "--system", "E8-cl8", "--plane", "11"]);
    assert_eq!(csv.lines().next(), Some("root_index,x,y,radius,orbit_id"));
    assert_eq!(csv.lines().count(), 241);
}

#[test]
fn folding_reports_the_h4_chain() {
    let v = json(&["fold", "--system", "E8-cl8", "--pairs", "1-7,2-6,3-5,4-8"]);
    assert_eq!(v["chain_orders"], serde_json::json!([3, 3, 5]));
    let v = json(&["fold", "--system", "D6", "--pairs", "1-5,2-4,3-6"]);
    assert_eq!(v["chain_orders"], serde_json::json!([3, 5]));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        vec!["roots", "--system", "E8"],
        vec!["pinors", "--system", "A3"],
        vec!["coxeter", "--system", "H4", "--factorize"],
        vec!["project", "--system", "D6", "--format", "svg"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn roots_csv_round_trips_through_a_simple_roots_file() {
    let dir = tempfile::tempdir().unwrap();
    for (name, header) in [("H3", "dim=3 field=sqrt-5"), ("D4", "dim=4 field=rational"), ("B3", "dim=3 field=sqrt-2")] {
        let csv = stdout(&["roots", "--system", name]);
        let rows = root_rows(&csv);
        let body: Vec<String> = csv.lines().skip(1).map(|l| l.split_once(',').unwrap().1.to_string()).collect();
        let path = dir.path().join(format!("{name}.txt"));
        std::fs::write(&path, format!("{header}\n{}\n", body.join("\n"))).unwrap();
        let again = stdout(&["roots", "--system", path.to_str().unwrap()]);
        assert_eq!(root_rows(&again), rows, "{name}");
    }
}

#[test]
fn float_simple_roots_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i2.txt");
    std::fs::write(&path, "dim=2 field=float\n1,0\n-0.5,0.8660254037844386\n").unwrap();
    let csv = stdout(&["roots", "--system", path.to_str().unwrap()]);
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn errors_are_machine_readable() {
    let out = cliffroots(&["roots", "--system", "Z9"]);
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "unknown_system");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "dim=3 field=sqrt-5\n1,0,0\n1,0\n").unwrap();
    let out = cliffroots(&["roots", "--system", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "parse");
    assert!(v["message"].as_str().unwrap().contains("line 3"));

    let out = cliffroots(&["coxeter", "--system", "H3", "--order", "1,1,2"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "invalid_order");

    let out = cliffroots(&["pinors", "--system", "H3", "--format", "svg"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "unsupported_format");
}

#[test]
fn output_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cliffroots"))
        .args(["cartan", "--system", "F4"])
        .env("CLIFFROOTS_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("cartan-F4.json")).unwrap();
    let v: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);

    let explicit = dir.path().join("nested").join("h3.csv");
    let out = cliffroots(&["roots", "--system", "H3", "--output", explicit.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(explicit).unwrap().lines().count(), 31);
}
