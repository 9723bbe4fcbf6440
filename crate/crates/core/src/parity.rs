//! Closed-form removability for the one-dimensional variants.
//!
//! A sequence with at least one heads-up coin is written as
//! `1^h0 0^t1 1^h1 ... 0^tn 1^hn`. The parity sum
//!
//! ```text
//! S = h0 + sum_i (-1)^{p_i} h_i - p_n,    p_i = (t_1 + ... + t_i) mod 2
//! ```
//!
//! does not depend on how the blocks are chosen, and a no-gaps line is
//! removable exactly when `S mod 3` is 0 or 1.

use std::fmt;

use crate::coin::CoinState;
use crate::config::{CircularConfig, LinearConfig, Variant};
use crate::error::{Error, Result};

/// Run lengths `H = (h_0..h_n)` and `T = (t_1..t_n)` of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    heads: Vec<u64>,
    tails: Vec<u64>,
}

impl BlockDecomposition {
    pub fn new(heads: Vec<u64>, tails: Vec<u64>) -> Result<Self> {
        if heads.len() != tails.len() + 1 {
            return Err(Error::MalformedDecomposition(format!(
                "|H| = {} but |T| = {}",
                heads.len(),
                tails.len()
            )));
        }
        Ok(BlockDecomposition { heads, tails })
    }

    /// Maximal blocks. Only `h_0` and `h_n` can be zero; an all-heads
    /// sequence gives `H = (m)`, `T = ()`.
    pub fn canonical(seq: &LinearConfig) -> Result<Self> {
        if !seq.has_heads() {
            return Err(Error::NoHeads);
        }
        let mut heads = vec![0];
        let mut tails = Vec::new();
        let mut prev = CoinState::Heads;
        for &coin in seq.coins() {
            match (prev, coin) {
                (_, CoinState::Heads) => {
                    if prev == CoinState::Tails {
                        heads.push(0);
                    }
                    *heads.last_mut().unwrap() += 1;
                }
                (CoinState::Heads, CoinState::Tails) => tails.push(1),
                (CoinState::Tails, CoinState::Tails) => *tails.last_mut().unwrap() += 1,
            }
            prev = coin;
        }
        if prev == CoinState::Tails {
            heads.push(0);
        }
        Ok(BlockDecomposition { heads, tails })
    }

    pub fn heads(&self) -> &[u64] {
        &self.heads
    }

    pub fn tails(&self) -> &[u64] {
        &self.tails
    }

    pub fn to_config(&self) -> LinearConfig {
        let mut coins = Vec::new();
        for (i, &h) in self.heads.iter().enumerate() {
            if i > 0 {
                coins.extend(std::iter::repeat_n(
                    CoinState::Tails,
                    self.tails[i - 1] as usize,
                ));
            }
            coins.extend(std::iter::repeat_n(CoinState::Heads, h as usize));
        }
        LinearConfig::new(coins)
    }

    pub fn parity_vector(&self) -> ParityVector {
        parity_vector(&self.tails)
    }

    /// Evaluates the parity sum on this particular choice of blocks. A
    /// decomposition with `T = ()` is evaluated as `H = (h_0, 0)`, `T = (0)`.
    pub fn parity_sum(&self) -> i64 {
        let parities = self.parity_vector();
        let signed: i64 = self.heads[1..]
            .iter()
            .zip(parities.bits())
            .map(|(&h, &p)| if p == 1 { -(h as i64) } else { h as i64 })
            .sum();
        let last = parities.bits().last().copied().unwrap_or(0) as i64;
        self.heads[0] as i64 + signed - last
    }

    /// Splits heads block `i` as `left, 0^0, h_i - left`.
    pub fn split_heads_block(&self, i: usize, left: u64) -> Result<Self> {
        let h = *self
            .heads
            .get(i)
            .ok_or_else(|| Error::MalformedDecomposition(format!("no heads block {i}")))?;
        if left > h {
            return Err(Error::MalformedDecomposition(format!(
                "cannot take {left} from a block of {h}"
            )));
        }
        let mut heads = self.heads.clone();
        let mut tails = self.tails.clone();
        heads[i] = left;
        heads.insert(i + 1, h - left);
        tails.insert(i, 0);
        Ok(BlockDecomposition { heads, tails })
    }

    /// Splits tails block `i` (0-based into `T`) as `left, 1^0, t - left`.
    pub fn split_tails_block(&self, i: usize, left: u64) -> Result<Self> {
        let t = *self
            .tails
            .get(i)
            .ok_or_else(|| Error::MalformedDecomposition(format!("no tails block {i}")))?;
        if left > t {
            return Err(Error::MalformedDecomposition(format!(
                "cannot take {left} from a block of {t}"
            )));
        }
        let mut heads = self.heads.clone();
        let mut tails = self.tails.clone();
        tails[i] = left;
        tails.insert(i + 1, t - left);
        heads.insert(i + 1, 0);
        Ok(BlockDecomposition { heads, tails })
    }
}

/// Prefix parities `p_i = (t_1 + ... + t_i) mod 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector(Vec<u8>);

impl ParityVector {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }
}

pub fn parity_vector(tails: &[u64]) -> ParityVector {
    let mut acc = 0u8;
    ParityVector(
        tails
            .iter()
            .map(|&t| {
                acc ^= (t & 1) as u8;
                acc
            })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParitySum {
    pub value: i64,
    pub residue: u8,
}

impl ParitySum {
    pub fn from_value(value: i64) -> Self {
        ParitySum {
            value,
            residue: value.rem_euclid(3) as u8,
        }
    }

    pub fn is_removable_residue(self) -> bool {
        self.residue != 2
    }
}

pub fn parity_sum(seq: &LinearConfig) -> Result<ParitySum> {
    let blocks = BlockDecomposition::canonical(seq)?;
    Ok(ParitySum::from_value(blocks.parity_sum()))
}

/// One signed term of the compressed parity sum, kept with its sign so that
/// `3 - 0 - 1` prints as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub magnitude: u64,
}

impl Term {
    pub fn value(self) -> i64 {
        if self.negative {
            -(self.magnitude as i64)
        } else {
            self.magnitude as i64
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedSum {
    /// The sequence with every even run of tails deleted.
    pub compressed: LinearConfig,
    pub terms: Vec<Term>,
    pub sum: ParitySum,
}

impl CompressedSum {
    /// Renders the terms, e.g. `3-0-1` or `0-1+1`.
    pub fn expression(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CompressedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, term) in self.terms.iter().enumerate() {
            match (k, term.negative) {
                (_, true) => write!(f, "-{}", term.magnitude)?,
                (0, false) => write!(f, "{}", term.magnitude)?,
                (_, false) => write!(f, "+{}", term.magnitude)?,
            }
        }
        Ok(())
    }
}

/// Deletes every run of tails of even length; adjacent heads runs merge.
pub fn drop_even_tails_runs(seq: &LinearConfig) -> LinearConfig {
    let coins = seq.coins();
    let mut out = Vec::with_capacity(coins.len());
    let mut i = 0;
    while i < coins.len() {
        if coins[i].is_heads() {
            out.push(CoinState::Heads);
            i += 1;
            continue;
        }
        let start = i;
        while i < coins.len() && !coins[i].is_heads() {
            i += 1;
        }
        if (i - start) % 2 == 1 {
            out.extend(std::iter::repeat_n(CoinState::Tails, i - start));
        }
    }
    LinearConfig::new(out)
}

/// The parity sum read off the compressed sequence: heads runs alternate
/// in sign, and one more is subtracted when the number of tails runs is odd.
pub fn parity_sum_compressed(seq: &LinearConfig) -> Result<CompressedSum> {
    if !seq.has_heads() {
        return Err(Error::NoHeads);
    }
    let compressed = drop_even_tails_runs(seq);
    let blocks = BlockDecomposition::canonical(&compressed)?;
    let n = blocks.tails().len();
    let mut terms: Vec<Term> = blocks
        .heads()
        .iter()
        .enumerate()
        .map(|(i, &h)| Term {
            negative: i % 2 == 1,
            magnitude: h,
        })
        .collect();
    if n % 2 == 1 {
        terms.push(Term {
            negative: true,
            magnitude: 1,
        });
    }
    let value = terms.iter().map(|t| t.value()).sum();
    Ok(CompressedSum {
        compressed,
        terms,
        sum: ParitySum::from_value(value),
    })
}

/// Left-to-right evaluation of the parity sum modulo 3.
///
/// `zeros` is the number of tails read so far mod 2 and `acc` the running
/// signed heads count mod 3. The residue of `S` is `acc - zeros`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ParityStream {
    pub acc: u8,
    pub zeros: u8,
    pub seen_heads: bool,
}

impl ParityStream {
    pub fn push(self, coin: CoinState) -> Self {
        match coin {
            CoinState::Heads => ParityStream {
                acc: if self.zeros == 0 {
                    (self.acc + 1) % 3
                } else {
                    (self.acc + 2) % 3
                },
                zeros: self.zeros,
                seen_heads: true,
            },
            CoinState::Tails => ParityStream {
                zeros: 1 - self.zeros,
                ..self
            },
        }
    }

    /// `None` until a heads-up coin has been read.
    pub fn residue(self) -> Option<u8> {
        self.seen_heads.then(|| (self.acc + 3 - self.zeros) % 3)
    }
}

pub fn parity_sum_streaming(seq: &LinearConfig) -> Result<u8> {
    seq.coins()
        .iter()
        .fold(ParityStream::default(), |s, &c| s.push(c))
        .residue()
        .ok_or(Error::NoHeads)
}

/// No-gaps line: empty is removable, all-tails is not, otherwise
/// `S mod 3 ∈ {0, 1}`.
pub fn is_removable_linear_no_gaps(seq: &LinearConfig) -> bool {
    if seq.is_empty() {
        return true;
    }
    match parity_sum(seq) {
        Ok(s) => s.is_removable_residue(),
        Err(_) => false,
    }
}

/// Line with gaps: removable iff the number of heads is odd (empty counts
/// as removable).
pub fn is_removable_linear_with_gaps(seq: &LinearConfig) -> bool {
    seq.is_empty() || seq.heads_count() % 2 == 1
}

/// Circle with gaps. Lengths 1 and 2 are special: only `1`, `10`, `01`.
pub fn is_removable_circular_with_gaps(circ: &CircularConfig) -> bool {
    let heads = circ.heads_count();
    match circ.len() {
        0 => true,
        1 => heads == 1,
        2 => heads == 1,
        _ => heads > 0 && heads.is_multiple_of(2),
    }
}

/// Circle without gaps: at least one head and an odd number of tails. The
/// lone coin `1` is also removable.
pub fn is_removable_circular_no_gaps(circ: &CircularConfig) -> bool {
    match circ.len() {
        0 => true,
        1 => circ.heads_count() == 1,
        _ => circ.heads_count() > 0 && circ.tails_count() % 2 == 1,
    }
}

/// Dispatches to the closed-form predicate of `variant`.
pub fn is_removable(variant: Variant, seq: &LinearConfig) -> bool {
    match variant {
        Variant::LineNoGaps => is_removable_linear_no_gaps(seq),
        Variant::LineGaps => is_removable_linear_with_gaps(seq),
        Variant::CircleNoGaps => is_removable_circular_no_gaps(&seq.clone().into()),
        Variant::CircleGaps => is_removable_circular_with_gaps(&seq.clone().into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReversalRelation {
    pub forward: i64,
    pub reversed: i64,
    /// `p_n`, the parity of the total number of tails.
    pub last_parity: u8,
}

impl ReversalRelation {
    /// `S(A^R) = S(A)` when `p_n = 0`, and `S(A^R) + S(A) = -2` otherwise.
    pub fn holds(&self) -> bool {
        if self.last_parity == 0 {
            self.reversed == self.forward
        } else {
            self.reversed == -self.forward - 2
        }
    }
}

pub fn reversal_parity_relation(seq: &LinearConfig) -> Result<ReversalRelation> {
    let forward = parity_sum(seq)?.value;
    let reversed = parity_sum(&seq.reversed())?.value;
    Ok(ReversalRelation {
        forward,
        reversed,
        last_parity: (seq.tails_count() % 2) as u8,
    })
}

/// The left-anchored removal patterns of the invariance argument, each with
/// an exact relation between `S(A)` and `S(A')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveCase {
    /// `•1 0 D → 1 D`
    LeadingHeadBeforeTails,
    /// `•1 1 D → 0 D`, `D` holding a head
    LeadingHeadBeforeHeads,
    /// `C 0 •1 0 D → C 1 1 D`
    IsolatedHead { sign: i64 },
    /// `C 1 •1 0 D → C 0 1 D`
    RunEnd { sign: i64 },
    /// `C 1 •1 1 D → C 0 0 D`, some head left over
    RunInterior { sign: i64 },
}

impl MoveCase {
    /// 1-based case number in the usual listing.
    pub fn number(self) -> u8 {
        match self {
            MoveCase::LeadingHeadBeforeTails => 1,
            MoveCase::LeadingHeadBeforeHeads => 2,
            MoveCase::IsolatedHead { .. } => 3,
            MoveCase::RunEnd { .. } => 4,
            MoveCase::RunInterior { .. } => 5,
        }
    }

    /// The exact parity sum after the move, given the one before.
    pub fn predicted_after(self, before: i64) -> i64 {
        match self {
            MoveCase::LeadingHeadBeforeTails | MoveCase::LeadingHeadBeforeHeads => 1 - before,
            MoveCase::IsolatedHead { sign }
            | MoveCase::RunEnd { sign }
            | MoveCase::RunInterior { sign } => before - 3 * sign,
        }
    }
}

/// Classifies removing the coin at `pos` (1-based). Returns `None` for moves
/// that only match a pattern after reversal, for illegal moves, and for moves
/// that leave no heads-up coin.
pub fn classify_move(seq: &LinearConfig, pos: usize) -> Option<MoveCase> {
    let after = seq.apply_move_no_gaps(pos).ok()?;
    if !after.has_heads() {
        return None;
    }
    let coins = seq.coins();
    let i = pos - 1;
    let right = coins.get(i + 1)?.is_heads();
    if i == 0 {
        return Some(if right {
            MoveCase::LeadingHeadBeforeHeads
        } else {
            MoveCase::LeadingHeadBeforeTails
        });
    }
    let left = coins[i - 1].is_heads();
    let zeros_before = coins[..i].iter().filter(|c| !c.is_heads()).count();
    let sign = if zeros_before % 2 == 0 { 1 } else { -1 };
    match (left, right) {
        (false, false) => Some(MoveCase::IsolatedHead { sign }),
        (true, false) => Some(MoveCase::RunEnd { sign }),
        (true, true) => Some(MoveCase::RunInterior { sign }),
        (false, true) => None,
    }
}
