//! Decide removability of one sequence under each rule set, and confirm
//! each verdict by exhaustive search.
//!
//! `cargo run --example check_variants -- 10010`

use coin_removal::parity::is_removable;
use coin_removal::solver::VariantOracle;
use coin_removal::{LinearConfig, Variant};

fn main() -> coin_removal::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "10010".into());
    let seq: LinearConfig = input.parse()?;
    let mut oracle = VariantOracle::new();
    println!("{:<14} {:>9} {:>9}", "variant", "rule", "search");
    for variant in Variant::ALL {
        let rule = is_removable(variant, &seq);
        let search = oracle.removable(variant, &seq)?;
        println!("{:<14} {:>9} {:>9}", variant.name(), rule, search);
    }
    Ok(())
}
