//! The coin-removal puzzle: remove heads-up coins one at a time, flipping
//! the neighbours of each removed coin, until nothing is left.
//!
//! The crate covers lines with and without gaps, circles with and without
//! gaps, rectangular grids and the two-player game on a line with gaps:
//!
//! - [`config`] and [`grid`]: configurations and move rules.
//! - [`parity`]: the parity-sum invariant and closed-form predicates.
//! - [`automaton`]: the recognizer for removable no-gaps lines, its
//!   minimization, and counting removable lines of each length.
//! - [`solver`]: exhaustive search, the greedy solver and the game.
//! - [`verify`]: cross-validation of every closed form against search.

pub mod automaton;
pub mod cli;
pub mod coin;
pub mod config;
pub mod error;
pub mod grid;
pub mod parity;
pub mod record;
pub mod solver;
pub mod trace;
pub mod verify;

pub use coin::{Cell, CoinState};
pub use config::{
    CircularConfig, GappedCircularConfig, GappedLinearConfig, LinearConfig, Puzzle, Variant,
};
pub use error::{Error, Result};
pub use grid::{Grid, GridPos};
pub use trace::MoveTrace;
