//! Play the two-player game on a line with gaps: report the winner and
//! every winning first move, and list the outcome of each short line.
//!
//! `cargo run --example two_player_game -- 1101`

use coin_removal::solver::GameSolver;
use coin_removal::{GappedLinearConfig, LinearConfig};

fn main() -> coin_removal::Result<()> {
    let mut solver = GameSolver::new();
    if let Some(input) = std::env::args().nth(1) {
        let pos: GappedLinearConfig = input.parse()?;
        println!("{pos}: {} player wins", solver.outcome(&pos)?);
        println!("winning moves: {:?}", solver.winning_moves(&pos)?);
        return Ok(());
    }
    for n in 1..=5 {
        for seq in LinearConfig::all_of_length(n) {
            let pos = seq.to_gapped();
            println!(
                "{pos:<6} {:<7} {:?}",
                solver.outcome(&pos)?.to_string(),
                solver.winning_moves(&pos)?
            );
        }
    }
    Ok(())
}
