//! Runs every acceptance criterion and prints one summary line per criterion.

use std::process::ExitCode;

use superkit::verify::{run_all, summarize, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let results = run_all(&VerifyOptions::default());
    for r in &results {
        println!("  {}", r.line());
    }
    println!();
    let summary = summarize(&results);
    for s in &summary {
        println!(
            "criterion {} ({}: {}): {} [{} checks, {} failed, {:.0} ms]",
            s.criterion,
            s.tag,
            CRITERIA[s.criterion - 1].1,
            if s.passed { "PASS" } else { "FAIL" },
            s.checks,
            s.failures,
            s.millis
        );
    }
    let all = summary.len() == CRITERIA.len() && summary.iter().all(|s| s.passed);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
