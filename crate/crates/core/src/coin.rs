use std::fmt;

use crate::error::{Error, Result};

/// Face of a single coin. Heads prints as `1`, tails as `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoinState {
    Tails,
    Heads,
}

impl CoinState {
    pub fn flipped(self) -> Self {
        match self {
            CoinState::Heads => CoinState::Tails,
            CoinState::Tails => CoinState::Heads,
        }
    }

    pub fn is_heads(self) -> bool {
        self == CoinState::Heads
    }

    pub fn symbol(self) -> char {
        match self {
            CoinState::Heads => '1',
            CoinState::Tails => '0',
        }
    }

    pub fn from_symbol(ch: char, offset: usize) -> Result<Self> {
        match ch {
            '1' => Ok(CoinState::Heads),
            '0' => Ok(CoinState::Tails),
            _ => Err(Error::InvalidCharacter { ch, offset }),
        }
    }
}

impl fmt::Display for CoinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A position in an arrangement that keeps its gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Empty,
    Tails,
    Heads,
}

impl Cell {
    /// Flips a coin; an empty cell stays empty.
    pub fn flipped(self) -> Self {
        match self {
            Cell::Heads => Cell::Tails,
            Cell::Tails => Cell::Heads,
            Cell::Empty => Cell::Empty,
        }
    }

    pub fn is_heads(self) -> bool {
        self == Cell::Heads
    }

    pub fn has_coin(self) -> bool {
        self != Cell::Empty
    }

    pub fn symbol(self) -> char {
        match self {
            Cell::Heads => '1',
            Cell::Tails => '0',
            Cell::Empty => '.',
        }
    }

    pub fn from_symbol(ch: char, offset: usize) -> Result<Self> {
        match ch {
            '1' => Ok(Cell::Heads),
            '0' => Ok(Cell::Tails),
            '.' => Ok(Cell::Empty),
            _ => Err(Error::InvalidCharacter { ch, offset }),
        }
    }
}

impl From<CoinState> for Cell {
    fn from(coin: CoinState) -> Self {
        match coin {
            CoinState::Heads => Cell::Heads,
            CoinState::Tails => Cell::Tails,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
