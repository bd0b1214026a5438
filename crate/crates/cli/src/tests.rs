//! End-to-end runs of the command dispatcher, in process.

use theta_asym::asym::{closed_b_critical_point, min_diff_prediction};
use crate::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut full = vec!["theta-asym"];
    full.extend_from_slice(args);
    let code = run(full, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn compute_table_one_cell() {
    let (code, out) = invoke(&["compute", "--family", "B", "-m", "1", "-k", "1", "-n", "2500", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    let rows = csv_rows(&out);
    assert_eq!(rows[0], ["family", "k", "m", "n", "exact", "asym", "ratio"]);
    assert_eq!(rows[1][0], "B");
    assert!(rows[1][4].starts_with("867686"), "{}", rows[1][4]);
    assert_eq!(rows[1][4].len(), 46);
    assert!(rows[1][5].starts_with("9.08058"));
    assert!(rows[1][6].starts_with("0.9555"));
}

#[test]
fn compute_rank_difference_and_small_rank() {
    let (code, out) = invoke(&["compute", "--family", "NDIFF", "-m", "0", "-k", "2", "-n", "2500", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    let row = &csv_rows(&out)[1];
    assert!(row[4].starts_with("304870"));
    assert!(row[6].starts_with("1.0067"));

    let (code, out) = invoke(&["compute", "--family", "N", "-m", "0", "-k", "2", "-n", "4", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["exact"], "1");
}

#[test]
fn compute_rejects_bad_input() {
    assert_eq!(invoke(&["compute", "--family", "B", "-m", "-1", "-n", "10"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--precision", "19", "compute", "--family", "B", "-m", "1", "-n", "10"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["compute", "--family", "Q", "-m", "1", "-n", "10"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["compute", "--family", "A", "-m", "1", "-n", "10", "--form", "kdiff"]).0, EXIT_USAGE);
}

#[test]
fn tables() {
    let (code, out) = invoke(&["table", "1", "--rows", "50", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.lines().nth(1).unwrap(),
        "50,2500,1,8.67687e45,9.08059e45,0.9555,50,1.77991e47,1.81723e47,0.9795"
    );
    let (code, out) = invoke(&["table", "2", "--rows", "100", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.lines().nth(1).unwrap(),
        "100,10000,0,4.78500e99,4.76884e99,1.0034,101,5.74203e101,5.72403e101,1.0031"
    );
    assert_eq!(invoke(&["table", "1", "--rows", "400"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["table", "3"]).0, EXIT_USAGE);
}

#[test]
fn scan_is_ordered_and_deterministic() {
    let args = ["scan", "--family", "B", "-k", "1", "-n", "2500", "-m", "0..60", "--output", "csv"];
    let (code, out) = invoke(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, invoke(&args).1);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 62);
    let ms: Vec<i64> = rows[1..].iter().map(|r| r[2].parse().unwrap()).collect();
    assert_eq!(ms, (0..=60).collect::<Vec<_>>());
    let exact: Vec<rug::Integer> = rows[1..].iter().map(|r| r[4].parse().unwrap()).collect();
    let argmax = exact.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).unwrap().0;
    assert!((argmax as f64 - closed_b_critical_point(1, 2500)).abs() <= 3.0, "{argmax}");
    // ratios approach 1 from below as m grows within the central range
    let ratio = |m: usize| rows[m + 1][6].parse::<f64>().unwrap();
    assert!(ratio(0) < ratio(30) && ratio(30) < 1.0);
}

#[test]
fn scan_k_difference_sign_change() {
    let (code, out) = invoke(&["scan", "--family", "N", "-k", "2", "-n", "2500", "-m", "0..120", "--form", "kdiff", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    let rows = csv_rows(&out);
    let exact: Vec<rug::Integer> = rows[1..].iter().map(|r| r[4].parse().unwrap()).collect();
    let asym: Vec<f64> = rows[1..].iter().map(|r| r[5].parse().unwrap()).collect();
    let first_sign_change = |v: &[bool]| v.windows(2).position(|w| w[0] != w[1]).unwrap();
    let exact_cross = first_sign_change(&exact.iter().map(|e| *e > 0).collect::<Vec<_>>());
    let asym_cross = first_sign_change(&asym.iter().map(|a| *a > 0.0).collect::<Vec<_>>());
    assert!((exact_cross as f64 - asym_cross as f64).abs() <= 3.0, "{exact_cross} vs {asym_cross}");
    assert!((asym_cross as f64 - min_diff_prediction(2500)).abs() <= 1.0);
}

#[test]
fn empty_scan_prints_header_only() {
    let (code, out) = invoke(&["scan", "--family", "A", "-n", "100", "-m", "5..4", "--output", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "family,k,m,n,exact,asym,ratio\n");
}

#[test]
fn verify_exit_codes() {
    let (code, out) = invoke(&["verify", "coeffs", "mass", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["suite"], "coeffs");

    // the stated peak location is half the true one
    let (code, out) = invoke(&["verify", "peak"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.starts_with("[FAIL] peak"));

    assert_eq!(invoke(&["verify", "nonsense"]).0, EXIT_USAGE);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out) = invoke(&["--cache-dir", d, "cache", "build", "-k", "2", "-N", "300"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("k=2 N=300"));
    assert_eq!(invoke(&["--cache-dir", d, "cache", "check", "-k", "2"]).0, EXIT_OK);

    // a cached table is used by compute
    let (code, _) = invoke(&["--cache-dir", d, "compute", "--family", "J", "-m", "3", "-k", "2", "-n", "250"]);
    assert_eq!(code, EXIT_OK);

    let path = dir.path().join("ptable-k2.txt");
    let text = std::fs::read_to_string(&path).unwrap().replacen("\n5\t", "\n5\t1", 1);
    std::fs::write(&path, text).unwrap();
    assert_eq!(invoke(&["--cache-dir", d, "cache", "check", "-k", "2"]).0, EXIT_FAILURE);
    assert_eq!(invoke(&["cache", "check"]).0, EXIT_USAGE);
}
