//! Compare the closed-form grid rule with exhaustive search on one grid or
//! on every grid of a shape.
//!
//! `cargo run --example grids -- 1010/0101`
//! `cargo run --example grids -- 2x4`

use coin_removal::grid::{grid_removable_bruteforce, siler_predicate, Grid};

fn main() -> coin_removal::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2x4".into());
    if let Some((r, c)) = arg.split_once('x') {
        let (rows, cols) = (r.parse().unwrap_or(2), c.parse().unwrap_or(4));
        let (mut removable, mut total) = (0, 0);
        for g in Grid::all_of_shape(rows, cols) {
            let rule = siler_predicate(&g)?;
            assert_eq!(rule, grid_removable_bruteforce(&g)?.removable, "{g}");
            removable += usize::from(rule);
            total += 1;
        }
        println!("{rows}x{cols}: {removable} of {total} grids removable; rule agrees with search");
        return Ok(());
    }
    let g: Grid = arg.parse()?;
    let search = grid_removable_bruteforce(&g)?;
    println!(
        "rule: {}  search: {}",
        siler_predicate(&g)?,
        search.removable
    );
    if let Some(trace) = search.trace {
        println!("{trace}");
    }
    Ok(())
}
