use std::process::{Command, Output};

fn nsgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgraph"))
        .args(args)
        .output()
        .expect("spawn nsgraph")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_three_four_at_twelve() {
    let o = nsgraph(&["classify", "--gens", "3,4", "--x", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order 6\n"), "{text}");
    assert!(text.contains("type 5 "), "{text}");
    assert!(text.contains("planarity (oracle) non-planar"), "{text}");
    assert!(
        text.contains("certificate K3,3 parts {3,6,9} / {4,8,12}"),
        "{text}"
    );
}

#[test]
fn classify_json() {
    let o = nsgraph(&["classify", "--gens", "2,3", "--x", "8", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["type"]["index"], 3);
    assert_eq!(v["case"]["index"], 5);
    assert_eq!(v["planar_theorem"], true);
    assert_eq!(v["planar_oracle"], true);
    assert!(v["certificate"].is_null());
}

#[test]
fn graph_dot_is_deterministic() {
    let args = ["graph", "--gens", "2,15", "--x", "12", "--format", "dot"];
    let a = nsgraph(&args);
    let b = nsgraph(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let vertices: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
        .collect();
    assert_eq!(
        vertices,
        ["  v2;", "  v4;", "  v6;", "  v8;", "  v10;", "  v12;"]
    );
    let edges: Vec<(u32, u32)> = text
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -- "))
        .map(|(a, b)| (a[1..].parse().unwrap(), b[1..].parse().unwrap()))
        .collect();
    assert_eq!(edges.len(), 9);
    assert!(edges.iter().all(|(a, b)| a < b));
    let mut sorted = edges.clone();
    sorted.sort();
    assert_eq!(sorted, edges);
}

#[test]
fn graph_json() {
    let o = nsgraph(&["graph", "--gens", "3,4", "--x", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generators"], serde_json::json!([3, 4]));
    assert_eq!(v["x"], 12);
    assert_eq!(v["vertices"], serde_json::json!([3, 4, 6, 8, 9, 12]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn info_and_bx() {
    let o = nsgraph(&["info", "--gens", "6,9,20"]);
    assert!(stdout(&o).contains("frobenius 43"));
    let o = nsgraph(&["bx", "--gens", "3,4", "--x", "12"]);
    assert!(stdout(&o).contains("B(12) = {0,3,4,6,8,9,12}"));
}

#[test]
fn ideal_subcommand() {
    let o = nsgraph(&["ideal", "--gens", "2,3", "--ideal-gens", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["irreducible_at"], 8);
    assert_eq!(v["classification"]["order"], 6);
    let o = nsgraph(&["ideal", "--gens", "2,3", "--ideal-gens", "6,7"]);
    assert!(stdout(&o).contains("irreducible: no"));
    let o = nsgraph(&["ideal", "--gens", "2,3", "--ideal-gens", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["classify", "--gens", "4,6", "--x", "12"][..],
        &["classify", "--gens", "3,4", "--x", "5"],
        &["classify", "--gens", "3,x", "--x", "5"],
        &["verify", "--max-dim", "1"],
        &["frobnicate"],
    ] {
        let o = nsgraph(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_clean_domain_exits_zero() {
    let o = nsgraph(&[
        "verify",
        "--max-dim",
        "2",
        "--max-gen",
        "5",
        "--max-x",
        "13",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("\nviolations 0\n"));
}

// <2,3> at x=14 already breaks the product bound, so this domain is not clean.
#[test]
fn verify_reports_violations_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let viol = dir.path().join("violations.csv");
    let report = dir.path().join("report.json");
    let o = nsgraph(&[
        "verify",
        "--max-dim",
        "2",
        "--max-gen",
        "5",
        "--max-x",
        "60",
        "--csv",
        csv.to_str().unwrap(),
        "--violations",
        viol.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(
        text.contains("violation product_bound <2,3> x=14"),
        "{text}"
    );
    assert!(
        text.contains("violation type_representative <3,5> x=15"),
        "{text}"
    );
    assert!(
        text.contains("planarity_agreement            violations 0"),
        "{text}"
    );
    let rows = std::fs::read_to_string(csv).unwrap();
    assert!(
        rows.starts_with("generators;x;order;case;type;planar_theorem;planar_oracle;agreement\n")
    );
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["semigroups"], 5);
    assert_eq!(v["violation_counts"]["planarity_agreement"], 0);
    assert!(std::fs::read_to_string(viol)
        .unwrap()
        .contains("2,3;14;product_bound"));
}
