use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {pos} is out of range for a configuration of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("the coin at position {pos} is not heads-up")]
    CoinNotHeads { pos: usize },

    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidCharacter { ch: char, offset: usize },

    #[error("empty input is not allowed for {0}")]
    EmptyInputWhereForbidden(&'static str),

    #[error("invalid symbol {ch:?} at offset {offset}; words are over {{0,1}}")]
    InvalidSymbol { ch: char, offset: usize },

    #[error("ragged grid: row {row} has {found} cells, expected {expected}")]
    RaggedGrid {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("sequence has no heads-up coin; the parity sum is undefined")]
    NoHeads,

    #[error("malformed block decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("configuration of size {size} exceeds the search guard of {limit}")]
    SizeGuardExceeded { size: usize, limit: usize },

    #[error("method {method} supports n <= {limit}, got {n}")]
    MethodRangeExceeded {
        method: &'static str,
        n: u64,
        limit: u64,
    },

    #[error("unsupported grid shape {rows}x{cols}: need 2 rows or an odd number of columns")]
    UnsupportedShape { rows: usize, cols: usize },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("trace replay failed at step {step}: {reason}")]
    ReplayMismatch { step: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
