//! Exhaustive search used as ground truth, the polynomial-time greedy
//! solver for no-gaps lines, reducibility, and the two-player game.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{
    CircularConfig, GappedCircularConfig, GappedLinearConfig, LinearConfig, Puzzle, Variant,
};
use crate::error::{Error, Result};
use crate::trace::MoveTrace;

/// Largest configuration (in positions) the one-dimensional searches accept.
pub const SEARCH_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult<P> {
    pub removable: bool,
    pub trace: Option<MoveTrace<P>>,
    pub states_explored: usize,
}

/// Memoized depth-first search for removability. One oracle can answer many
/// queries; the memo is keyed on the exact configuration.
#[derive(Debug)]
pub struct Oracle<C: Puzzle> {
    memo: HashMap<C, bool>,
    memoize: bool,
    limit: usize,
    explored: usize,
}

impl<C: Puzzle> Oracle<C> {
    pub fn new(limit: usize) -> Self {
        Oracle {
            memo: HashMap::new(),
            memoize: true,
            limit,
            explored: 0,
        }
    }

    /// Plain backtracking, for checking the memoized search against.
    pub fn without_memo(limit: usize) -> Self {
        Oracle {
            memoize: false,
            ..Oracle::new(limit)
        }
    }

    /// Configurations evaluated so far (memo hits are not counted).
    pub fn states_explored(&self) -> usize {
        self.explored
    }

    fn guard(&self, config: &C) -> Result<()> {
        if config.size() > self.limit {
            Err(Error::SizeGuardExceeded {
                size: config.size(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn removable(&mut self, config: &C) -> Result<bool> {
        self.guard(config)?;
        Ok(self.search(config))
    }

    fn search(&mut self, config: &C) -> bool {
        if config.is_cleared() {
            return true;
        }
        if self.memoize {
            if let Some(&known) = self.memo.get(config) {
                return known;
            }
        }
        self.explored += 1;
        let verdict = config.legal_moves().into_iter().any(|pos| {
            let child = config.apply_move(pos).expect("legal moves always apply");
            self.search(&child)
        });
        if self.memoize {
            self.memo.insert(config.clone(), verdict);
        }
        verdict
    }

    /// Removability together with a certificate, rebuilt by always taking
    /// the first move whose result is removable.
    pub fn solve(&mut self, config: &C) -> Result<SearchResult<C::Pos>> {
        let before = self.explored;
        let removable = self.removable(config)?;
        let trace = removable.then(|| {
            let mut trace = MoveTrace::new(config.to_string());
            let mut cur = config.clone();
            while !cur.is_cleared() {
                let (pos, next) = cur
                    .legal_moves()
                    .into_iter()
                    .map(|pos| (pos, cur.apply_move(pos).expect("legal moves always apply")))
                    .find(|(_, next)| self.search(next))
                    .expect("a removable configuration has a removable successor");
                trace.push(pos, next.to_string());
                cur = next;
            }
            trace
        });
        Ok(SearchResult {
            removable,
            trace,
            states_explored: self.explored - before,
        })
    }
}

/// One-shot exhaustive search with a fresh memo.
pub fn brute_force_removable<C: Puzzle>(config: &C) -> Result<SearchResult<C::Pos>> {
    Oracle::new(SEARCH_LIMIT).solve(config)
}

/// Oracles for all four one-dimensional variants, each with its own memo.
#[derive(Debug)]
pub struct VariantOracle {
    line_no_gaps: Oracle<LinearConfig>,
    line_gaps: Oracle<GappedLinearConfig>,
    circle_no_gaps: Oracle<CircularConfig>,
    circle_gaps: Oracle<GappedCircularConfig>,
}

impl Default for VariantOracle {
    fn default() -> Self {
        VariantOracle {
            line_no_gaps: Oracle::new(SEARCH_LIMIT),
            line_gaps: Oracle::new(SEARCH_LIMIT),
            circle_no_gaps: Oracle::new(SEARCH_LIMIT),
            circle_gaps: Oracle::new(SEARCH_LIMIT),
        }
    }
}

impl VariantOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Removability of the initial configuration `seq` under `variant`.
    pub fn removable(&mut self, variant: Variant, seq: &LinearConfig) -> Result<bool> {
        match variant {
            Variant::LineNoGaps => self.line_no_gaps.removable(seq),
            Variant::LineGaps => self.line_gaps.removable(&seq.to_gapped()),
            Variant::CircleNoGaps => self.circle_no_gaps.removable(&seq.clone().into()),
            Variant::CircleGaps => {
                let circ: CircularConfig = seq.clone().into();
                self.circle_gaps.removable(&circ.to_gapped())
            }
        }
    }

    /// Removability plus a certificate whose steps use the variant's own
    /// encoding.
    pub fn solve(&mut self, variant: Variant, seq: &LinearConfig) -> Result<SearchResult<usize>> {
        match variant {
            Variant::LineNoGaps => self.line_no_gaps.solve(seq),
            Variant::LineGaps => self.line_gaps.solve(&seq.to_gapped()),
            Variant::CircleNoGaps => self.circle_no_gaps.solve(&seq.clone().into()),
            Variant::CircleGaps => {
                let circ: CircularConfig = seq.clone().into();
                self.circle_gaps.solve(&circ.to_gapped())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedySolution {
    pub trace: MoveTrace,
    /// For each step, which heads-up coin from the left was taken (0 = first).
    pub head_ranks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotRemovable {
    /// The state in which no removal clears the line or keeps a head.
    pub stuck_at: LinearConfig,
    pub moves_made: usize,
}

impl fmt::Display for NotRemovable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not removable: stuck at {:?} after {} moves",
            self.stuck_at.to_string(),
            self.moves_made
        )
    }
}

/// Repeatedly removes the leftmost heads-up coin whose removal either
/// clears the line or leaves some head. No backtracking: each step costs
/// at most one move application per head.
pub fn greedy_solve(seq: &LinearConfig) -> std::result::Result<GreedySolution, NotRemovable> {
    let mut trace = MoveTrace::new(seq.to_string());
    let mut head_ranks = Vec::with_capacity(seq.len());
    let mut cur = seq.clone();
    while !cur.is_empty() {
        let choice = cur
            .legal_moves()
            .into_iter()
            .enumerate()
            .find_map(|(rank, pos)| {
                let next = cur
                    .apply_move_no_gaps(pos)
                    .expect("legal moves always apply");
                (next.is_empty() || next.has_heads()).then_some((rank, pos, next))
            });
        match choice {
            Some((rank, pos, next)) => {
                trace.push(pos, next.to_string());
                head_ranks.push(rank);
                cur = next;
            }
            None => {
                return Err(NotRemovable {
                    stuck_at: cur,
                    moves_made: trace.len(),
                })
            }
        }
    }
    Ok(GreedySolution { trace, head_ranks })
}

/// Whether `to` can be reached from `from` by no-gaps removals.
pub fn is_reducible(from: &LinearConfig, to: &LinearConfig) -> Result<bool> {
    if from.len() > SEARCH_LIMIT {
        return Err(Error::SizeGuardExceeded {
            size: from.len(),
            limit: SEARCH_LIMIT,
        });
    }
    let mut seen = HashSet::new();
    let mut stack = vec![from.clone()];
    while let Some(cur) = stack.pop() {
        if &cur == to {
            return Ok(true);
        }
        if cur.len() <= to.len() || !seen.insert(cur.clone()) {
            continue;
        }
        for pos in cur.legal_moves() {
            stack.push(cur.apply_move_no_gaps(pos)?);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GameOutcome {
    FirstWins,
    SecondWins,
}

impl fmt::Display for GameOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameOutcome::FirstWins => "first",
            GameOutcome::SecondWins => "second",
        })
    }
}

/// Exact minimax for the two-player game on a line with gaps: players
/// alternate removals and whoever cannot remove a coin loses.
#[derive(Debug, Default)]
pub struct GameSolver {
    memo: HashMap<GappedLinearConfig, bool>,
    rng: Option<ChaCha8Rng>,
}

impl GameSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Explores moves in a seeded random order instead of left to right.
    pub fn shuffled(seed: u64) -> Self {
        GameSolver {
            memo: HashMap::new(),
            rng: Some(ChaCha8Rng::seed_from_u64(seed)),
        }
    }

    pub fn outcome(&mut self, config: &GappedLinearConfig) -> Result<GameOutcome> {
        if config.len() > SEARCH_LIMIT {
            return Err(Error::SizeGuardExceeded {
                size: config.len(),
                limit: SEARCH_LIMIT,
            });
        }
        Ok(if self.mover_wins(config) {
            GameOutcome::FirstWins
        } else {
            GameOutcome::SecondWins
        })
    }

    /// Moves after which the opponent, now to move, loses.
    pub fn winning_moves(&mut self, config: &GappedLinearConfig) -> Result<Vec<usize>> {
        self.outcome(config)?;
        let mut wins: Vec<usize> = config
            .legal_moves()
            .into_iter()
            .filter(|&pos| {
                let child = config.apply_move_with_gaps(pos).expect("legal move");
                !self.mover_wins(&child)
            })
            .collect();
        wins.sort_unstable();
        Ok(wins)
    }

    fn mover_wins(&mut self, config: &GappedLinearConfig) -> bool {
        if let Some(&known) = self.memo.get(config) {
            return known;
        }
        let mut moves = config.legal_moves();
        if let Some(rng) = self.rng.as_mut() {
            moves.shuffle(rng);
        }
        let wins = moves.into_iter().any(|pos| {
            let child = config.apply_move_with_gaps(pos).expect("legal move");
            !self.mover_wins(&child)
        });
        self.memo.insert(config.clone(), wins);
        wins
    }
}

pub fn game_winner(config: &GappedLinearConfig) -> Result<GameOutcome> {
    GameSolver::new().outcome(config)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub count: u64,
    pub words: Option<Vec<String>>,
}

/// Runs the oracle of `variant` on all `2^n` configurations of length `n`.
pub fn enumerate_removable(n: usize, variant: Variant, keep_words: bool) -> Result<Enumeration> {
    enumerate_with(&mut VariantOracle::new(), n, variant, keep_words)
}

/// As [`enumerate_removable`], reusing the memo of `oracle`.
pub fn enumerate_with(
    oracle: &mut VariantOracle,
    n: usize,
    variant: Variant,
    keep_words: bool,
) -> Result<Enumeration> {
    if n > SEARCH_LIMIT {
        return Err(Error::SizeGuardExceeded {
            size: n,
            limit: SEARCH_LIMIT,
        });
    }
    let mut count = 0;
    let mut words = keep_words.then(Vec::new);
    for seq in LinearConfig::all_of_length(n) {
        if oracle.removable(variant, &seq)? {
            count += 1;
            if let Some(words) = words.as_mut() {
                words.push(seq.to_string());
            }
        }
    }
    Ok(Enumeration { count, words })
}

/// Solving strategy for the no-gaps line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Greedy,
    Search,
}

impl FromStr for SolveMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "greedy" => Ok(SolveMethod::Greedy),
            "search" => Ok(SolveMethod::Search),
            _ => Err(format!("unknown method {s:?}; expected greedy or search")),
        }
    }
}
