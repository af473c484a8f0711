//! Runs every acceptance suite at its full grid and prints one line per criterion.

use std::process::ExitCode;

use g2_gaudin::verify::{run_suite, Suite};

fn main() -> ExitCode {
    // `cargo test` passes filter and harness flags; a listing request runs nothing.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let mut failed = 0;
    for suite in Suite::ALL {
        let report = run_suite(suite, suite.default_lmax());
        println!("{}", report.line());
        if !report.passed {
            failed += 1;
            for f in report.failures.iter().skip(1).take(9) {
                println!("    {f}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", Suite::ALL.len() - failed, Suite::ALL.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
