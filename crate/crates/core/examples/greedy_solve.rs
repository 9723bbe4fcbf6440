//! Solve a line with the greedy rule and print each removal.
//!
//! `cargo run --example greedy_solve -- 110001101110`

use coin_removal::solver::greedy_solve;
use coin_removal::LinearConfig;

fn main() -> coin_removal::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "110110".into());
    let seq: LinearConfig = input.parse()?;
    match greedy_solve(&seq) {
        Ok(solution) => {
            println!("{}", solution.trace);
            println!("head ranks used: {:?}", solution.head_ranks);
            solution.trace.replay(&seq)?;
        }
        Err(stuck) => println!("{seq}: {stuck}"),
    }
    Ok(())
}
