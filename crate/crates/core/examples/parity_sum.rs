//! Show the block decomposition and parity sum of a sequence in its three
//! equivalent forms.
//!
//! `cargo run --example parity_sum -- 000110101110100110110`

use coin_removal::parity::{
    parity_sum, parity_sum_compressed, parity_sum_streaming, BlockDecomposition,
};
use coin_removal::LinearConfig;

fn main() -> coin_removal::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "000110101110100110110".into());
    let seq: LinearConfig = input.parse()?;
    let blocks = BlockDecomposition::canonical(&seq)?;
    let direct = parity_sum(&seq)?;
    let compressed = parity_sum_compressed(&seq)?;

    println!("sequence    {seq}");
    println!("heads runs  {:?}", blocks.heads());
    println!("tails runs  {:?}", blocks.tails());
    println!("parities    {:?}", blocks.parity_vector().bits());
    println!("sum         {} (residue {})", direct.value, direct.residue);
    println!(
        "compressed  {} = {}",
        compressed.compressed,
        compressed.expression()
    );
    println!("streaming   residue {}", parity_sum_streaming(&seq)?);
    println!("removable   {}", direct.is_removable_residue());
    Ok(())
}
