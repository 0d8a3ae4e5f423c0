//! Acceptance criteria 1–10: one PASS/FAIL line per criterion, each with its
//! runtime budget. Runs the suites through the `bz verify` front end.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::Value;

/// (criterion, suite, runtime budget in seconds)
const CRITERIA: [(usize, &str, u64); 10] = [
    (1, "case1", 2),
    (2, "case4", 5),
    (3, "case56", 1),
    (4, "lemmas", 30),
    (5, "ramified", 10),
    (6, "smith", 5),
    (7, "classgroup", 5),
    (8, "tfactor", 1),
    (9, "epsilon", 5),
    (10, "arch", 5),
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (n, suite, budget) in CRITERIA {
        let start = Instant::now();
        let out = bz_cli::run(["bz", "verify", "--suite", suite]);
        let elapsed = start.elapsed();
        let doc: Value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
        let report = &doc["reports"][0];
        let (passed, total) = (report["summary"]["passed"].as_u64().unwrap_or(0), report["summary"]["total"].as_u64().unwrap_or(0));
        let in_time = elapsed <= Duration::from_secs(budget);
        let ok = out.code == 0 && total > 0 && passed == total && in_time;
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {n}: {} — suite {suite}, {passed}/{total} cases, {:.3} s (budget {budget} s){}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over budget" }
        );
        if let Some(cases) = report["cases"].as_array() {
            for c in cases.iter().filter(|c| c["pass"] != Value::Bool(true)) {
                println!("    failed {}: expected {} got {}", c["id"], c["expected"], c["actual"]);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
