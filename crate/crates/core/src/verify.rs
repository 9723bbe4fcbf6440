//! Cross-validation of every closed form against exhaustive search, up to a
//! chosen sequence length. This is what `coins verify` runs.

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::{
    adjacency_matrix, build_recognizer, count_removable, recurrence_r, relabeling_to, CountMethod,
    PRINTED_MATRIX,
};
use crate::config::{GappedLinearConfig, LinearConfig, Puzzle, Variant};
use crate::grid::{grid_removable_bruteforce, siler_predicate, Grid};
use crate::parity::{
    classify_move, is_removable, is_removable_linear_no_gaps, parity_sum, parity_sum_compressed,
    parity_sum_streaming, reversal_parity_relation, BlockDecomposition,
};
use crate::solver::{greedy_solve, GameOutcome, GameSolver, VariantOracle};

/// Largest `max_len` accepted by [`run_all`].
pub const MAX_VERIFY_LEN: usize = 14;

/// Default seed for the randomized suites.
pub const DEFAULT_SEED: u64 = 0x5eed;

const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {} ({} checks)", self.name, self.checked)?;
        for failure in &self.failures {
            write!(f, "\n       {failure}")?;
        }
        Ok(())
    }
}

struct Suite {
    name: &'static str,
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            passed: self.failed == 0,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

fn line(s: &str) -> LinearConfig {
    s.parse().expect("literal sequences parse")
}

/// Removability verdicts for the six worked sequences.
pub fn table_suite() -> SuiteReport {
    let mut suite = Suite::new("worked-table verdicts");
    let rows = [
        ("100110", false),
        ("000101", true),
        ("000110011001", true),
        ("001001100101", false),
        ("111001100001110010011", false),
        ("000110101110100110110", true),
    ];
    for (seq, expect) in rows {
        let got = is_removable_linear_no_gaps(&line(seq));
        suite.check(got == expect, || format!("{seq}: predicate says {got}"));
        if seq.len() <= 12 {
            let oracle = VariantOracle::new()
                .removable(Variant::LineNoGaps, &line(seq))
                .unwrap_or(!expect);
            suite.check(oracle == expect, || format!("{seq}: oracle says {oracle}"));
        }
    }
    suite.finish()
}

pub fn counting_suite(max_len: usize) -> SuiteReport {
    let mut suite = Suite::new("counting methods agree");
    for n in 0..=max_len as u64 {
        let m = count_removable(n, CountMethod::Matrix).ok();
        let r = count_removable(n, CountMethod::Recurrence).ok();
        let e = count_removable(n, CountMethod::Enumerate).ok();
        suite.check(m.is_some() && m == r && r == e, || {
            format!("n={n}: matrix {m:?}, recurrence {r:?}, enumerate {e:?}")
        });
    }
    for n in 0..=60 {
        let m = count_removable(n, CountMethod::Matrix).ok();
        let r = count_removable(n, CountMethod::Recurrence).ok();
        suite.check(m.is_some() && m == r, || {
            format!("n={n}: matrix {m:?} vs recurrence {r:?}")
        });
    }
    suite.finish()
}

pub fn minimized_dfa_suite() -> SuiteReport {
    let mut suite = Suite::new("minimized recognizer");
    let dfa = build_recognizer();
    let min = dfa.minimize();
    suite.check(dfa.state_count() == 8, || {
        format!("recognizer has {} states", dfa.state_count())
    });
    suite.check(min.state_count() == 5, || {
        format!("minimized has {} states", min.state_count())
    });
    suite.check(min.language_equivalent(&dfa), || {
        "minimization changed the language".into()
    });
    let target: Vec<Vec<u64>> = PRINTED_MATRIX.iter().map(|r| r.to_vec()).collect();
    let perm = relabeling_to(&min, &target, 0, &[1, 3]);
    suite.check(perm.is_some(), || {
        format!(
            "no relabeling onto the printed matrix:\n{}",
            adjacency_matrix(&min)
        )
    });
    suite.finish()
}

pub fn language_suite(max_len: usize) -> SuiteReport {
    let mut suite = Suite::new("recognizer = parity sum = search");
    let dfa = build_recognizer();
    let min = dfa.minimize();
    let mut oracle = VariantOracle::new();
    for n in 1..=max_len {
        for seq in LinearConfig::all_of_length(n) {
            let word = seq.to_string();
            let predicate = is_removable_linear_no_gaps(&seq);
            let by_dfa = dfa.run(&word).map(|r| r.accepted).unwrap_or(!predicate);
            let by_min = min.run(&word).map(|r| r.accepted).unwrap_or(!predicate);
            let by_search = oracle
                .removable(Variant::LineNoGaps, &seq)
                .unwrap_or(!predicate);
            suite.check(predicate == by_dfa && by_dfa == by_min && by_min == by_search, || {
                format!("{word}: predicate {predicate}, dfa {by_dfa}, minimized {by_min}, search {by_search}")
            });
            if seq.has_heads() {
                let canonical = parity_sum(&seq).ok();
                let compressed = parity_sum_compressed(&seq).ok().map(|c| c.sum);
                let streaming = parity_sum_streaming(&seq).ok();
                suite.check(
                    canonical == compressed && canonical.map(|s| s.residue) == streaming,
                    || format!("{word}: S {canonical:?}, compressed {compressed:?}, streaming {streaming:?}"),
                );
            }
        }
    }
    suite.finish()
}

fn variant_suite(name: &'static str, variants: &[Variant], max_len: usize) -> SuiteReport {
    let mut suite = Suite::new(name);
    let mut oracle = VariantOracle::new();
    for &variant in variants {
        for n in 0..=max_len {
            let mut count = 0u64;
            for seq in LinearConfig::all_of_length(n) {
                let predicate = is_removable(variant, &seq);
                let search = oracle.removable(variant, &seq).unwrap_or(!predicate);
                count += u64::from(search);
                suite.check(predicate == search, || {
                    format!("{variant} {seq}: predicate {predicate}, search {search}")
                });
            }
            if variant == Variant::LineGaps && n > 0 {
                suite.check(count == 1 << (n - 1), || {
                    format!(
                        "line-gaps n={n}: {count} removable, expected {}",
                        1u64 << (n - 1)
                    )
                });
            }
        }
    }
    suite.finish()
}

pub fn line_gaps_suite(max_len: usize) -> SuiteReport {
    variant_suite("line with gaps: odd heads", &[Variant::LineGaps], max_len)
}

pub fn circular_suite(max_len: usize) -> SuiteReport {
    variant_suite(
        "circles: closed forms = search",
        &[Variant::CircleGaps, Variant::CircleNoGaps],
        max_len,
    )
}

/// Move invariance mod 3, the exact per-case relations, and the reversal
/// relation.
pub fn invariance_suite(max_len: usize) -> SuiteReport {
    let mut suite = Suite::new("parity-sum invariance");
    for n in 1..=max_len {
        for seq in LinearConfig::all_of_length(n).filter(|s| s.has_heads()) {
            let before = parity_sum(&seq).expect("has heads").value;
            for pos in seq.legal_moves() {
                let after_seq = seq.apply_move_no_gaps(pos).expect("legal move");
                if !after_seq.has_heads() {
                    continue;
                }
                let after = parity_sum(&after_seq).expect("has heads").value;
                suite.check(
                    (before.rem_euclid(3) == 2) == (after.rem_euclid(3) == 2),
                    || format!("{seq} -[{pos}]-> {after_seq}: S {before} -> {after}"),
                );
                if let Some(case) = classify_move(&seq, pos) {
                    let predicted = case.predicted_after(before);
                    suite.check(predicted == after, || {
                        format!(
                            "{seq} -[{pos}]-> {after_seq}: case {} predicts {predicted}, got {after}",
                            case.number()
                        )
                    });
                }
            }
            let rel = reversal_parity_relation(&seq).expect("has heads");
            suite.check(rel.holds(), || format!("reversal of {seq}: {rel:?}"));
        }
    }
    suite.finish()
}

/// A random non-canonical choice of blocks for `seq`, made by inserting
/// zero-length blocks.
pub fn random_decomposition(seq: &LinearConfig, rng: &mut impl Rng) -> BlockDecomposition {
    let mut blocks = BlockDecomposition::canonical(seq).expect("sequence has heads");
    for _ in 0..rng.gen_range(1..=4) {
        let split_heads = blocks.tails().is_empty() || rng.gen_bool(0.5);
        blocks = if split_heads {
            let i = rng.gen_range(0..blocks.heads().len());
            let left = rng.gen_range(0..=blocks.heads()[i]);
            blocks.split_heads_block(i, left)
        } else {
            let i = rng.gen_range(0..blocks.tails().len());
            let left = rng.gen_range(0..=blocks.tails()[i]);
            blocks.split_tails_block(i, left)
        }
        .expect("split indices are in range");
    }
    blocks
}

/// `sequences` random sequences, `per_sequence` random decompositions each.
pub fn decomposition_suite(seed: u64, sequences: usize, per_sequence: usize) -> SuiteReport {
    let mut suite = Suite::new("parity sum independent of blocks");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < sequences {
        let len = rng.gen_range(1..=24);
        let seq = LinearConfig::from_bits(rng.gen::<u64>() & ((1 << len) - 1), len);
        if !seq.has_heads() {
            continue;
        }
        done += 1;
        let canonical = parity_sum(&seq).expect("has heads").value;
        for _ in 0..per_sequence {
            let blocks = random_decomposition(&seq, &mut rng);
            let value = blocks.parity_sum();
            suite.check(blocks.to_config() == seq && value == canonical, || {
                format!(
                    "{seq}: H={:?} T={:?} gives {value}, canonical {canonical}",
                    blocks.heads(),
                    blocks.tails()
                )
            });
        }
    }
    suite.finish()
}

pub fn greedy_suite(max_len: usize) -> SuiteReport {
    let mut suite = Suite::new("greedy solver = search");
    let mut oracle = VariantOracle::new();
    for n in 0..=max_len {
        for seq in LinearConfig::all_of_length(n) {
            let removable = oracle.removable(Variant::LineNoGaps, &seq).unwrap_or(false);
            match greedy_solve(&seq) {
                Ok(sol) => {
                    suite.check(removable, || {
                        format!("{seq}: greedy solved a non-removable line")
                    });
                    suite.check(sol.trace.replay(&seq).is_ok(), || {
                        format!("{seq}: trace does not replay")
                    });
                    suite.check(sol.head_ranks.iter().all(|&r| r < 2), || {
                        format!("{seq}: greedy needed heads {:?}", sol.head_ranks)
                    });
                }
                Err(stuck) => suite.check(!removable, || format!("{seq}: greedy {stuck}")),
            }
        }
    }
    suite.finish()
}

/// Every gapped line of length `n` (over `{0, 1, .}`).
pub fn all_gapped_lines(n: usize) -> impl Iterator<Item = GappedLinearConfig> {
    use crate::coin::Cell;
    (0..3u64.pow(n as u32)).map(move |mut code| {
        let cells = (0..n)
            .map(|_| {
                let c = match code % 3 {
                    0 => Cell::Tails,
                    1 => Cell::Heads,
                    _ => Cell::Empty,
                };
                code /= 3;
                c
            })
            .collect();
        GappedLinearConfig::new(cells)
    })
}

/// Determinacy of the game and independence from move order.
pub fn game_suite(max_len: usize, seed: u64) -> SuiteReport {
    let mut suite = Suite::new("two-player game");
    let mut ordered = GameSolver::new();
    let mut shuffled = GameSolver::shuffled(seed);
    for (text, expect) in [
        ("111", GameOutcome::FirstWins),
        ("101", GameOutcome::SecondWins),
    ] {
        let got = ordered.outcome(&text.parse().expect("literal")).ok();
        suite.check(got == Some(expect), || format!("{text}: {got:?}"));
    }
    for n in 0..=max_len.min(10) {
        for pos in all_gapped_lines(n) {
            let a = ordered.outcome(&pos).ok();
            let b = shuffled.outcome(&pos).ok();
            suite.check(a.is_some() && a == b, || {
                format!("{pos}: ordered {a:?}, shuffled {b:?}")
            });
            // the mover wins exactly when some move hands the opponent a loss
            let any_losing_child = pos.legal_moves().into_iter().any(|m| {
                let child = pos.apply_move_with_gaps(m).expect("legal move");
                ordered.outcome(&child).ok() == Some(GameOutcome::SecondWins)
            });
            suite.check(
                (a == Some(GameOutcome::FirstWins)) == any_losing_child,
                || format!("{pos}: outcome {a:?} inconsistent with its moves"),
            );
        }
    }
    suite.finish()
}

/// Grid shapes on which the characterization is compared with search.
pub const GRID_SHAPES: [(usize, usize); 7] =
    [(2, 2), (2, 4), (2, 6), (1, 3), (2, 3), (3, 3), (2, 5)];

/// Siler's characterization against search on every grid of the listed
/// shapes with at most `max_cells` cells.
pub fn grid_suite(max_cells: usize) -> SuiteReport {
    let mut suite = Suite::new("grids: characterization = search");
    for (text, expect) in [("1010/0101", true), ("0110/0000", false)] {
        let g: Grid = text.parse().expect("literal grid");
        let search = grid_removable_bruteforce(&g).map(|r| r.removable).ok();
        suite.check(search == Some(expect), || {
            format!("{text}: search {search:?}")
        });
    }
    for (rows, cols) in GRID_SHAPES.into_iter().filter(|(r, c)| r * c <= max_cells) {
        let mut oracle = crate::solver::Oracle::new(crate::grid::GRID_SEARCH_LIMIT);
        for g in Grid::all_of_shape(rows, cols) {
            let predicate = siler_predicate(&g).ok();
            let search = oracle.removable(&g).ok();
            suite.check(predicate.is_some() && predicate == search, || {
                format!("{g}: characterization {predicate:?}, search {search:?}")
            });
        }
    }
    suite.finish()
}

pub fn auxiliary_suite(up_to: usize) -> SuiteReport {
    let mut suite = Suite::new("auxiliary sequences");
    let seq = recurrence_r(up_to as u64);
    let jacobsthal: Vec<BigUint> = [1u32, 1, 3, 5, 11, 21, 43]
        .iter()
        .map(|&x| x.into())
        .collect();
    suite.check(seq.b[1..=7] == jacobsthal[..], || {
        format!("b prefix {:?}", &seq.b[1..=7])
    });
    for n in 1..=up_to {
        suite.check(seq.r[n] == &seq.b[n] + &seq.d[n], || {
            format!("r_{n} != b_{n} + d_{n}")
        });
        if n < up_to {
            suite.check(seq.d[n + 1] == seq.r[n], || format!("d_{} != r_{n}", n + 1));
        }
        if n >= 2 && n < up_to {
            suite.check(seq.b[n + 1] == &seq.b[n] + &seq.b[n - 1] * 2u32, || {
                format!("Jacobsthal step fails at n={n}")
            });
            suite.check(
                seq.d[n + 1] == &seq.d[n] + &seq.d[n - 1] * 2u32 + 1u32,
                || format!("d step fails at n={n}"),
            );
        }
        if n >= 3 {
            suite.check(
                &seq.a[n] + &seq.a[n - 1] == BigUint::from(1u32) && seq.a[n] == seq.a[n - 2],
                || format!("a_n identities fail at n={n}"),
            );
        }
    }
    suite.finish()
}

/// Sequences where the informal example lists disagree with the theorem.
pub fn discrepancy_suite() -> SuiteReport {
    let mut suite = Suite::new("informal-list discrepancies");
    let mut oracle = VariantOracle::new();
    for (seq, expect) in [("110110", true), ("010111", false)] {
        let search = oracle.removable(Variant::LineNoGaps, &line(seq)).ok();
        let predicate = is_removable_linear_no_gaps(&line(seq));
        suite.check(search == Some(expect) && predicate == expect, || {
            format!("{seq}: search {search:?}, predicate {predicate}")
        });
    }
    suite.finish()
}

/// Runs every suite. Exhaustive suites go up to `max_len` coins.
pub fn run_all(max_len: usize, seed: u64) -> Vec<SuiteReport> {
    vec![
        table_suite(),
        counting_suite(max_len),
        minimized_dfa_suite(),
        language_suite(max_len),
        line_gaps_suite(max_len),
        invariance_suite(max_len),
        decomposition_suite(seed, 100, 10),
        circular_suite(max_len),
        greedy_suite(max_len),
        game_suite(max_len, seed),
        grid_suite(crate::grid::GRID_SEARCH_LIMIT),
        auxiliary_suite(30),
        discrepancy_suite(),
    ]
}
