//! Acceptance gate: one pass/fail line per criterion.

use qhat::harness::{self, Fixtures, Status};
use std::process::ExitCode;

fn main() -> ExitCode {
    let f = Fixtures::builtin().expect("fixtures load");
    let report = harness::verify(&f, None, None).expect("suite runs");
    let mut failed = Vec::new();
    for c in &report.checks {
        let mark = if c.status == Status::Pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} {}", c.criterion, c.check);
        if c.status == Status::Fail {
            let subs = c.detail["subchecks"].as_array().cloned().unwrap_or_default();
            for s in subs.iter().filter(|s| s["ok"] == false) {
                println!("    failed: {s}");
            }
            failed.push(c.check.clone());
        }
    }
    if report.checks.len() != 15 {
        println!("expected 15 criteria, found {}", report.checks.len());
        return ExitCode::FAILURE;
    }
    println!("acceptance: {} passed, {} failed", report.summary.passed, report.summary.failed);
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
