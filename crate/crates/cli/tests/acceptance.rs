//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Slow table rows (n = 200, 400) run with `--include-ignored` or
//! `THETA_ASYM_SLOW=1`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use theta_asym_cli::table::{table, Which};
use theta_asym_cli::verify::{self, Check};
use theta_asym_cli::{RunConfig, TableStore};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &[Check]) -> Self {
        let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{} ({})", c.name, c.detail)).collect();
        if failed.is_empty() {
            Outcome { passed: true, detail: format!("{} checks", checks.len()) }
        } else {
            Outcome { passed: false, detail: failed.join("; ") }
        }
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    slow: bool,
    run: fn(&TableStore, &RunConfig) -> anyhow::Result<Outcome>,
}

/// `(row, exact, asym, ratio)` for both column groups.
type Expected = [(u64, [(&'static str, &'static str, &'static str); 2]); 2];

const TABLE1_FAST: Expected = [
    (50, [("8.67687e45", "9.08059e45", "0.9555"), ("1.77991e47", "1.81723e47", "0.9795")]),
    (100, [("1.39866e100", "1.43049e100", "0.9777"), ("5.66389e101", "5.72242e101", "0.9898")]),
];
const TABLE1_SLOW: Expected = [
    (200, [("1.11517e210", "1.12772e210", "0.9889"), ("8.97474e211", "9.02079e211", "0.9949")]),
    (400, [("2.22252e431", "2.23496e431", "0.9944"), ("3.56615e433", "3.57527e433", "0.9974")]),
];
const TABLE2_FAST: Expected = [
    (50, [("3.04871e45", "3.02819e45", "1.0068"), ("1.82908e47", "1.81764e47", "1.0063")]),
    (100, [("4.78500e99", "4.76884e99", "1.0034"), ("5.74203e101", "5.72403e101", "1.0031")]),
];
const TABLE2_SLOW: Expected = [
    (200, [("3.76555e209", "3.75918e209", "1.0017"), ("9.03662e211", "9.02244e211", "1.0016")]),
    (400, [("7.45623e430", "7.44992e430", "1.0008"), ("3.57845e433", "3.57564e433", "1.0008")]),
];

fn compare_table(which: Which, expected: &Expected, store: &TableStore, config: &RunConfig) -> anyhow::Result<Outcome> {
    let rows: Vec<u64> = expected.iter().map(|e| e.0).collect();
    let got = table(which, &rows, store, config)?;
    let mut mismatches = Vec::new();
    for (row, (n, cells)) in got.iter().zip(expected) {
        for (cell, want) in row.cells.iter().zip(cells) {
            let have = (cell.exact.as_str(), cell.asym.as_str(), cell.ratio.as_str());
            if have != *want {
                mismatches.push(format!("n={n} m={}: got {have:?}, want {want:?}", cell.m));
            }
        }
    }
    Ok(if mismatches.is_empty() {
        Outcome { passed: true, detail: format!("rows {rows:?} match to the printed digits") }
    } else {
        Outcome { passed: false, detail: mismatches.join("; ") }
    })
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: "1",
            title: "table 1 rows n = 50, 100",
            budget: secs(30),
            slow: false,
            run: |s, c| compare_table(Which::Second, &TABLE1_FAST, s, c),
        },
        Criterion {
            id: "1-slow",
            title: "table 1 rows n = 200, 400",
            budget: secs(1800),
            slow: true,
            run: |s, c| compare_table(Which::Second, &TABLE1_SLOW, s, c),
        },
        Criterion {
            id: "2",
            title: "table 2 rows n = 50, 100",
            budget: secs(30),
            slow: false,
            run: |s, c| compare_table(Which::RankSecond, &TABLE2_FAST, s, c),
        },
        Criterion {
            id: "2-slow",
            title: "table 2 rows n = 200, 400",
            budget: secs(1800),
            slow: true,
            run: |s, c| compare_table(Which::RankSecond, &TABLE2_SLOW, s, c),
        },
        Criterion {
            id: "3",
            title: "coefficient closed forms, J <= 4, 1e-12 relative",
            budget: secs(1),
            slow: false,
            run: |_, c| Ok(Outcome::from_checks(&verify::coeffs(c.precision)?)),
        },
        Criterion {
            id: "4",
            title: "quadratic sums vs Lerch expansion; crank/rank vs enumeration",
            budget: secs(60),
            slow: false,
            run: |s, _| Ok(Outcome::from_checks(&verify::oracle(s)?)),
        },
        Criterion {
            id: "5",
            title: "mass and symmetry of N_1, N_2",
            budget: secs(30),
            slow: false,
            run: |s, _| {
                let mut checks = verify::mass(s)?;
                checks.extend(verify::symmetry(s)?);
                Ok(Outcome::from_checks(&checks))
            },
        },
        Criterion {
            id: "6",
            title: "closed-form error contraction err(4n) <= 0.7 err(n)",
            budget: secs(120),
            slow: false,
            run: |s, c| Ok(Outcome::from_checks(&verify::contraction(s, c.precision)?)),
        },
        Criterion {
            id: "7",
            title: "N_2(., n) unimodal, 50 <= n <= 300",
            budget: secs(60),
            slow: false,
            run: |s, _| Ok(Outcome::from_checks(&verify::unimodal(s)?)),
        },
        Criterion {
            id: "8a",
            title: "argmax of b_(m,1)(n) within 3 of peak_prediction, n = 2500, 10000",
            budget: secs(60),
            slow: false,
            run: |s, _| Ok(Outcome::from_checks(&verify::peak_checks(s)?)),
        },
        Criterion {
            id: "8b",
            title: "minimiser of |N_2 - N_3| within 5 of min_diff_prediction, n = 2500",
            budget: secs(60),
            slow: false,
            run: |s, _| Ok(Outcome::from_checks(&[verify::min_diff_check(s)?])),
        },
        Criterion {
            id: "9",
            title: "false theta routes and uniform error law",
            budget: secs(30),
            slow: false,
            run: |_, c| Ok(Outcome::from_checks(&verify::false_theta(c.precision)?)),
        },
        Criterion {
            id: "10",
            title: "partition profile reproduces p(n+1)/p(n) at 10^4 within 1e-6",
            budget: secs(5),
            slow: false,
            run: |s, c| Ok(Outcome::from_checks(&verify::profile(s, c.precision)?)),
        },
    ]
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        for c in criteria() {
            println!("criterion {}: test", c.id);
        }
        return ExitCode::SUCCESS;
    }
    let run_slow = args.iter().any(|a| a == "--include-ignored" || a == "--ignored")
        || std::env::var("THETA_ASYM_SLOW").is_ok_and(|v| v == "1");
    let config = RunConfig::default().with_slow(run_slow);
    let store = TableStore::new(None);
    let mut failed = 0;
    let mut ran = 0;
    for c in criteria() {
        if c.slow && !run_slow {
            println!("SKIP criterion {}: {} (slow; run with --include-ignored)", c.id, c.title);
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = (c.run)(&store, &config).unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e:#}") });
        let elapsed = start.elapsed();
        let in_budget = elapsed <= c.budget;
        let passed = outcome.passed && in_budget;
        let timing = if in_budget {
            format!("{:.2} s", elapsed.as_secs_f64())
        } else {
            format!("{:.2} s, over the {} s budget", elapsed.as_secs_f64(), c.budget.as_secs())
        };
        println!("{} criterion {}: {} [{timing}] {}", if passed { "PASS" } else { "FAIL" }, c.id, c.title, outcome.detail);
        if !passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of {ran} criteria passed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
