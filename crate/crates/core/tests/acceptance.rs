//! One line per criterion, always printed; exits non-zero if any fails.
//! `cargo test --test acceptance -- 3 5` runs only criteria 3 and 5.

use std::process::ExitCode;

use npreproj_core::acceptance::{run, TITLES};

const SEED: u64 = 0x5eed;

fn main() -> ExitCode {
    let picked: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).filter(|id| (1..=TITLES.len()).contains(id)).collect();
    let ids: Vec<usize> = if picked.is_empty() { (1..=TITLES.len()).collect() } else { picked };
    let mut failed = 0;
    for id in ids {
        let r = run(id, SEED);
        println!("{}", r.line());
        for f in r.facts.iter().filter(|f| !f.holds) {
            println!("  {}: {}", f.label, f.observed);
        }
        failed += usize::from(!r.passed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
