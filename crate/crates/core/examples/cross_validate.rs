//! Run every cross-check suite and print one line per suite.
//!
//! `cargo run --release --example cross_validate -- 12`

use coin_removal::verify::{run_all, DEFAULT_SEED, MAX_VERIFY_LEN};

fn main() {
    let max_len = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10)
        .min(MAX_VERIFY_LEN);
    let reports = run_all(max_len, DEFAULT_SEED);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
