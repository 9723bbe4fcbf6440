//! Build the recognizer, minimize it, print its DOT graph and count
//! removable sequences three ways.
//!
//! `cargo run --example dfa_counting -- 40`

use coin_removal::automaton::{
    adjacency_matrix, build_recognizer, count_removable, export_dot, CountMethod,
};

fn main() -> coin_removal::Result<()> {
    let up_to: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let full = build_recognizer();
    let min = full.minimize();
    println!(
        "recognizer: {} states, minimized: {}",
        full.state_count(),
        min.state_count()
    );
    println!("adjacency:\n{}", adjacency_matrix(&min));
    println!("{}", export_dot(&min));

    for n in 1..=up_to {
        let matrix = count_removable(n, CountMethod::Matrix)?;
        let recurrence = count_removable(n, CountMethod::Recurrence)?;
        assert_eq!(matrix, recurrence);
        let enumerated = if n <= 16 {
            count_removable(n, CountMethod::Enumerate)?.to_string()
        } else {
            "-".into()
        };
        println!("n={n:>3}  {matrix:>24}  {enumerated:>8}");
    }
    Ok(())
}
