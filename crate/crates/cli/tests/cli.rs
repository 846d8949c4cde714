use std::process::{Command, Output};

use diagcoinv::characters::BoundReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagcoinv")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gordon_reports() {
    let v = json(&["gordon", "--n", "4", "--format", "json"]);
    assert_eq!((v["tab"].as_u64(), v["dim"].as_u64()), (Some(495), Some(6561)));
    assert_eq!((v["det"].as_u64(), v["chi"].as_u64()), (Some(1), Some(5)));
    let v = json(&["--format", "json", "gordon", "--n", "2"]);
    assert_eq!((v["dim"].as_u64(), v["chi"].as_u64()), (Some(25), Some(3)));
    let text = String::from_utf8(run(&["gordon", "--n", "3"]).stdout).unwrap();
    assert!(text.contains("343"));
}

#[test]
fn rectangle_and_hook() {
    let v = json(&["rect", "--shape", "2,2", "--target", "5", "--format", "json"]);
    assert_eq!((v["det_mult"].as_u64(), v["chi_total"].as_u64()), (Some(1), Some(6)));
    assert_eq!(v["det_fillings"], serde_json::json!([[[[1, 3], [1, 3]], []]]));
    let v = json(&["hook", "--n", "5", "--format", "json"]);
    assert_eq!(v["scenario"]["k"], 3);
    assert_eq!((v["chi_generic"].as_u64(), v["eps_chi_lower"].as_i64()), (Some(8), Some(2)));
    assert_eq!(v["params"]["c"], "3/5");
}

#[test]
fn bounds_table() {
    let out = run(&["bounds", "--from", "4", "--to", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        let computed: i64 = cols[5].parse().unwrap();
        let stated: i64 = cols[6].parse().unwrap();
        assert!(computed >= stated, "{row}");
    }
    let reports: Vec<BoundReport> =
        serde_json::from_value(json(&["bounds", "--from", "4", "--to", "8", "--format", "json"])).unwrap();
    assert_eq!(reports.iter().map(|r| r.eps_chi_lower).collect::<Vec<_>>(), vec![1, 2, 3, 6, 8]);
}

#[test]
fn oracle_outputs() {
    let v = json(&["oracle", "--n", "1", "--format", "json"]);
    assert_eq!((v["total"].as_u64(), v["epsilon"].as_i64()), (Some(3), Some(0)));
    let csv = String::from_utf8(run(&["oracle", "--n", "2", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("x_degree,y_degree,quotient_dim"));
    let total: u64 = csv.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 25);
}

#[test]
fn diagram_view() {
    let args = [
        "diagram", "--shape", "3,1,1", "--q", "1,3,7;1;1", "--param", "c=3/5", "--param", "d=27/10", "--all-p",
        "--format", "json",
    ];
    let v = json(&args);
    assert_eq!(v["generic"], false);
    assert_eq!(v["det_vertical_strip"], false);
    let v = json(&[
        "diagram", "--shape", "3,1,1", "--q", "1,3,5;1;1", "--param", "c=3/5", "--param", "d=27/10", "--format", "json",
    ]);
    assert_eq!(v["det_vertical_strip"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hook", "--n", "4", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rect", "--shape", "2,1", "--target", "5"]).status.code(), Some(2));
    assert_eq!(run(&["gordon", "--n", "4", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--from", "5", "--to", "4"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--n", "4"]).status.code(), Some(3));
    assert_eq!(run(&["oracle", "--n", "2", "--max-degree", "2"]).status.code(), Some(3));
    assert_eq!(run(&["gordon", "--n", "21"]).status.code(), Some(3));
    // a filling outside the admissible set is a usage error
    let out = run(&["diagram", "--shape", "2", "--q", "0,9", "--param", "c=1", "--param", "d=1"]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn deterministic_across_thread_counts() {
    let a = run(&["--threads", "1", "bounds", "--from", "4", "--to", "10", "--format", "json"]).stdout;
    let b = run(&["--threads", "1", "bounds", "--from", "4", "--to", "10", "--format", "json"]).stdout;
    let c = run(&["--threads", "4", "bounds", "--from", "4", "--to", "10", "--format", "json"]).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
    let a = run(&["--threads", "1", "oracle", "--n", "2", "--format", "json"]).stdout;
    let b = run(&["--threads", "3", "oracle", "--n", "2", "--format", "json"]).stdout;
    assert_eq!(a, b);
}
