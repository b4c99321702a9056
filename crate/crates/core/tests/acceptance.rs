//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Criterion 8 is known to be red (see the decisions ledger); its exact
//! mismatch table is asserted so that any change is noticed.

use linfty_core::suite::{run_criterion, SuiteConfig, CRITERIA};
use std::process::ExitCode;
use std::time::Instant;

const KNOWN_RED: u8 = 8;
const KNOWN_RED_FAILURES: [&str; 7] = [
    "dx12: displayed 1/2, computed 1",
    "[x1,dx12]: displayed -1/12, computed -1/6",
    "[x2,dx12]: displayed -1/12, computed -1/6",
    "[x12,dx1]: displayed 1/6, computed 1/3",
    "[x12,dx2]: displayed 1/6, computed 1/3",
    "[x1,[x1,x2]]: displayed 1/12, computed -1/12",
    "[x2,[x1,x2]]: displayed 1/12, computed -1/12",
];

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut unexpected = Vec::new();
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let outcome = run_criterion(id, &cfg).expect("known criterion");
        println!("{} ({:.1} s){}", outcome.summary(), start.elapsed().as_secs_f64(), outcome.details());
        let expected = if id == KNOWN_RED { outcome.failures == KNOWN_RED_FAILURES } else { outcome.passed() };
        if !expected {
            unexpected.push(id);
        }
    }
    let passed = CRITERIA.len() - 1 - unexpected.iter().filter(|&&id| id != KNOWN_RED).count();
    println!("acceptance: {passed}/{} criteria pass; criterion {KNOWN_RED} is red as recorded", CRITERIA.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
