//! Driving the built-in consistency suites from library code. Each suite
//! replays a family of cross-checks (dual-route computations, involution
//! laws, conservation identities) over a configurable search range.
//!
//! Run with `cargo run --example consistency_suites`.

use crepant::suites::{run_suite, SuiteParams, SUITE_NAMES};

fn main() -> crepant::Result<()> {
    // Small ranges keep this quick; the CLI `verify` subcommand exposes the
    // same machinery with larger defaults.
    let params = SuiteParams {
        max_r: 20,
        max_s: 4,
        max_entry: 200,
        seed: 7,
    };

    let mut all_passed = true;
    for name in SUITE_NAMES {
        let report = run_suite(name, &params)?;
        for check in &report.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            println!(
                "{status}  {}/{} ({} cases)",
                report.suite, check.name, check.cases
            );
            for line in &check.detail {
                println!("        {line}");
            }
            all_passed &= check.passed;
        }
    }
    println!("\noverall: {}", if all_passed { "pass" } else { "FAIL" });
    Ok(())
}
