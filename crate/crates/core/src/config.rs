//! Configurations for the one-dimensional variants and their move rules.
//!
//! Positions in every public interface are 1-based, leftmost coin = 1.
//! Circular configurations use the linear text encoding and wrap around:
//! the last character is adjacent to the first.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coin::{Cell, CoinState};
use crate::error::{Error, Result};

/// A puzzle state with a move rule. Every variant, grids included, implements
/// this so the search code in [`crate::solver`] is written once.
pub trait Puzzle: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    type Pos: Copy + Eq + fmt::Debug + fmt::Display + Serialize;

    /// Positions holding a heads-up coin, in ascending order.
    fn legal_moves(&self) -> Vec<Self::Pos>;

    fn apply_move(&self, pos: Self::Pos) -> Result<Self>;

    /// Number of coins still present.
    fn coin_count(&self) -> usize;

    /// Number of positions, the quantity bounded by search guards.
    fn size(&self) -> usize;

    fn is_cleared(&self) -> bool {
        self.coin_count() == 0
    }
}

/// The four one-dimensional variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    LineNoGaps,
    LineGaps,
    CircleNoGaps,
    CircleGaps,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::LineNoGaps,
        Variant::LineGaps,
        Variant::CircleNoGaps,
        Variant::CircleGaps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::LineNoGaps => "line-nogaps",
            Variant::LineGaps => "line-gaps",
            Variant::CircleNoGaps => "circle-nogaps",
            Variant::CircleGaps => "circle-gaps",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                format!("unknown variant {s:?}; expected one of line-nogaps, line-gaps, circle-nogaps, circle-gaps")
            })
    }
}

fn parse_coins(text: &str) -> Result<Vec<CoinState>> {
    text.chars()
        .enumerate()
        .map(|(offset, ch)| CoinState::from_symbol(ch, offset))
        .collect()
}

fn parse_cells(text: &str) -> Result<Vec<Cell>> {
    text.chars()
        .enumerate()
        .map(|(offset, ch)| Cell::from_symbol(ch, offset))
        .collect()
}

fn write_symbols<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    items.iter().try_for_each(|item| write!(f, "{item}"))
}

fn check_index(pos: usize, len: usize) -> Result<usize> {
    if pos == 0 || pos > len {
        Err(Error::PositionOutOfRange { pos, len })
    } else {
        Ok(pos - 1)
    }
}

fn heads_positions<'a, I>(cells: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a Cell>,
{
    cells
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c.is_heads())
        .map(|(i, _)| i + 1)
        .collect()
}

/// Distinct cyclic neighbours of index `i` in a circle of `n` positions.
fn cyclic_neighbors(i: usize, n: usize) -> Vec<usize> {
    match n {
        0 | 1 => vec![],
        2 => vec![1 - i],
        _ => vec![(i + n - 1) % n, (i + 1) % n],
    }
}

/// A line of coins whose gaps close up after each removal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LinearConfig {
    coins: Vec<CoinState>,
}

impl LinearConfig {
    pub fn new(coins: Vec<CoinState>) -> Self {
        LinearConfig { coins }
    }

    /// `1^n`.
    pub fn all_heads(n: usize) -> Self {
        LinearConfig::new(vec![CoinState::Heads; n])
    }

    /// The word of length `len` whose i-th coin (from the left) is bit
    /// `len - 1 - i` of `bits`, so counting upward enumerates words in
    /// lexicographic order.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        let coins = (0..len)
            .map(|i| {
                if bits >> (len - 1 - i) & 1 == 1 {
                    CoinState::Heads
                } else {
                    CoinState::Tails
                }
            })
            .collect();
        LinearConfig { coins }
    }

    /// All `2^len` words of length `len`.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = LinearConfig> {
        (0..1u64 << len).map(move |bits| LinearConfig::from_bits(bits, len))
    }

    pub fn coins(&self) -> &[CoinState] {
        &self.coins
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn heads_count(&self) -> usize {
        self.coins.iter().filter(|c| c.is_heads()).count()
    }

    pub fn tails_count(&self) -> usize {
        self.len() - self.heads_count()
    }

    pub fn has_heads(&self) -> bool {
        self.coins.iter().any(|c| c.is_heads())
    }

    pub fn reversed(&self) -> Self {
        LinearConfig::new(self.coins.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &LinearConfig) -> Self {
        let mut coins = self.coins.clone();
        coins.extend_from_slice(&other.coins);
        LinearConfig { coins }
    }

    /// Removes the heads-up coin at `pos`, flips its neighbours and closes
    /// the gap.
    pub fn apply_move_no_gaps(&self, pos: usize) -> Result<Self> {
        let i = check_index(pos, self.len())?;
        if !self.coins[i].is_heads() {
            return Err(Error::CoinNotHeads { pos });
        }
        let mut coins = self.coins.clone();
        if i > 0 {
            coins[i - 1] = coins[i - 1].flipped();
        }
        if i + 1 < coins.len() {
            coins[i + 1] = coins[i + 1].flipped();
        }
        coins.remove(i);
        Ok(LinearConfig { coins })
    }

    pub fn to_gapped(&self) -> GappedLinearConfig {
        GappedLinearConfig::new(self.coins.iter().copied().map(Cell::from).collect())
    }
}

impl fmt::Display for LinearConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.coins)
    }
}

impl FromStr for LinearConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_coins(s).map(LinearConfig::new)
    }
}

impl Puzzle for LinearConfig {
    type Pos = usize;

    fn legal_moves(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| self.coins[p - 1].is_heads())
            .collect()
    }

    fn apply_move(&self, pos: usize) -> Result<Self> {
        self.apply_move_no_gaps(pos)
    }

    fn coin_count(&self) -> usize {
        self.len()
    }

    fn size(&self) -> usize {
        self.len()
    }
}

/// A line of fixed length where removed coins leave an empty position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GappedLinearConfig {
    cells: Vec<Cell>,
}

impl GappedLinearConfig {
    pub fn new(cells: Vec<Cell>) -> Self {
        GappedLinearConfig { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn heads_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_heads()).count()
    }

    pub fn empty_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.has_coin()).count()
    }

    /// Removes the heads-up coin at `pos` and flips whichever of the two
    /// adjacent positions still hold a coin.
    pub fn apply_move_with_gaps(&self, pos: usize) -> Result<Self> {
        let i = check_index(pos, self.len())?;
        if !self.cells[i].is_heads() {
            return Err(Error::CoinNotHeads { pos });
        }
        let mut cells = self.cells.clone();
        cells[i] = Cell::Empty;
        if i > 0 {
            cells[i - 1] = cells[i - 1].flipped();
        }
        if i + 1 < cells.len() {
            cells[i + 1] = cells[i + 1].flipped();
        }
        Ok(GappedLinearConfig { cells })
    }
}

impl fmt::Display for GappedLinearConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.cells)
    }
}

impl FromStr for GappedLinearConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cells(s).map(GappedLinearConfig::new)
    }
}

impl From<&LinearConfig> for GappedLinearConfig {
    fn from(line: &LinearConfig) -> Self {
        line.to_gapped()
    }
}

impl Puzzle for GappedLinearConfig {
    type Pos = usize;

    fn legal_moves(&self) -> Vec<usize> {
        heads_positions(&self.cells)
    }

    fn apply_move(&self, pos: usize) -> Result<Self> {
        self.apply_move_with_gaps(pos)
    }

    fn coin_count(&self) -> usize {
        self.len() - self.empty_count()
    }

    fn size(&self) -> usize {
        self.len()
    }
}

/// Coins on a circle that closes up after each removal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CircularConfig {
    coins: Vec<CoinState>,
}

impl CircularConfig {
    pub fn new(coins: Vec<CoinState>) -> Self {
        CircularConfig { coins }
    }

    pub fn coins(&self) -> &[CoinState] {
        &self.coins
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn heads_count(&self) -> usize {
        self.coins.iter().filter(|c| c.is_heads()).count()
    }

    pub fn tails_count(&self) -> usize {
        self.len() - self.heads_count()
    }

    /// Rotates left by `k` positions.
    pub fn rotated(&self, k: usize) -> Self {
        let mut coins = self.coins.clone();
        if !coins.is_empty() {
            let k = k % coins.len();
            coins.rotate_left(k);
        }
        CircularConfig { coins }
    }

    /// Removes the heads-up coin at `pos`. Each distinct cyclic neighbour is
    /// flipped exactly once, so in a circle of two the other coin flips once.
    pub fn apply_move_circular(&self, pos: usize) -> Result<Self> {
        let n = self.len();
        let i = check_index(pos, n)?;
        if !self.coins[i].is_heads() {
            return Err(Error::CoinNotHeads { pos });
        }
        let mut coins = self.coins.clone();
        for j in cyclic_neighbors(i, n) {
            coins[j] = coins[j].flipped();
        }
        coins.remove(i);
        Ok(CircularConfig { coins })
    }

    pub fn to_gapped(&self) -> GappedCircularConfig {
        GappedCircularConfig::new(self.coins.iter().copied().map(Cell::from).collect())
    }
}

impl From<LinearConfig> for CircularConfig {
    fn from(line: LinearConfig) -> Self {
        CircularConfig { coins: line.coins }
    }
}

impl fmt::Display for CircularConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.coins)
    }
}

impl FromStr for CircularConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_coins(s).map(CircularConfig::new)
    }
}

impl Puzzle for CircularConfig {
    type Pos = usize;

    fn legal_moves(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| self.coins[p - 1].is_heads())
            .collect()
    }

    fn apply_move(&self, pos: usize) -> Result<Self> {
        self.apply_move_circular(pos)
    }

    fn coin_count(&self) -> usize {
        self.len()
    }

    fn size(&self) -> usize {
        self.len()
    }
}

/// Coins on a circle where removed coins leave an empty position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GappedCircularConfig {
    cells: Vec<Cell>,
}

impl GappedCircularConfig {
    pub fn new(cells: Vec<Cell>) -> Self {
        GappedCircularConfig { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn heads_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_heads()).count()
    }

    pub fn apply_move_circular_with_gaps(&self, pos: usize) -> Result<Self> {
        let n = self.len();
        let i = check_index(pos, n)?;
        if !self.cells[i].is_heads() {
            return Err(Error::CoinNotHeads { pos });
        }
        let mut cells = self.cells.clone();
        cells[i] = Cell::Empty;
        for j in cyclic_neighbors(i, n) {
            cells[j] = cells[j].flipped();
        }
        Ok(GappedCircularConfig { cells })
    }
}

impl fmt::Display for GappedCircularConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.cells)
    }
}

impl FromStr for GappedCircularConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cells(s).map(GappedCircularConfig::new)
    }
}

impl Puzzle for GappedCircularConfig {
    type Pos = usize;

    fn legal_moves(&self) -> Vec<usize> {
        heads_positions(&self.cells)
    }

    fn apply_move(&self, pos: usize) -> Result<Self> {
        self.apply_move_circular_with_gaps(pos)
    }

    fn coin_count(&self) -> usize {
        self.cells.iter().filter(|c| c.has_coin()).count()
    }

    fn size(&self) -> usize {
        self.len()
    }
}
