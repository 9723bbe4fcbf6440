//! Command-line front end. The `coins` binary only forwards to [`execute`].
//!
//! Exit codes: 0 when a command evaluated its input (whatever the verdict),
//! 1 when `verify` finds a failing suite, 2 for usage and parse errors.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::automaton::{build_recognizer, count_removable, export_dot, CountMethod};
use crate::config::{GappedLinearConfig, LinearConfig, Variant};
use crate::error::Error;
use crate::grid::{grid_removable_bruteforce, siler_predicate, Grid};
use crate::parity::{is_removable, parity_sum, parity_sum_compressed};
use crate::record::OutputRecord;
use crate::solver::{greedy_solve, GameSolver, VariantOracle};
use crate::verify::{run_all, DEFAULT_SEED, MAX_VERIFY_LEN};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coins",
    version,
    about = "Analyse coin-removal puzzles and count removable lines"
)]
pub struct Cli {
    /// Print the structured record as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    LineNogaps,
    LineGaps,
    CircleNogaps,
    CircleGaps,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::LineNogaps => Variant::LineNoGaps,
            VariantArg::LineGaps => Variant::LineGaps,
            VariantArg::CircleNogaps => Variant::CircleNoGaps,
            VariantArg::CircleGaps => Variant::CircleGaps,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveArg {
    Greedy,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountArg {
    Matrix,
    Recurrence,
    Enumerate,
}

impl From<CountArg> for CountMethod {
    fn from(m: CountArg) -> Self {
        match m {
            CountArg::Matrix => CountMethod::Matrix,
            CountArg::Recurrence => CountMethod::Recurrence,
            CountArg::Enumerate => CountMethod::Enumerate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Siler,
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide removability with the closed-form rule of a variant.
    Check {
        sequence: String,
        #[arg(long, value_enum, default_value = "line-nogaps")]
        variant: VariantArg,
    },
    /// Print a removal sequence, or report that none exists.
    Solve {
        sequence: String,
        #[arg(long, value_enum, default_value = "line-nogaps")]
        variant: VariantArg,
        /// Defaults to greedy for line-nogaps and search otherwise.
        #[arg(long, value_enum)]
        method: Option<SolveArg>,
    },
    /// Count removable no-gaps sequences of length N.
    Count {
        n: u64,
        #[arg(long, value_enum, default_value = "matrix")]
        method: CountArg,
    },
    /// Winner of the two-player game on a line with gaps.
    Game { sequence: String },
    /// Removability of a grid given as rows joined by '/'.
    Grid {
        grid: String,
        #[arg(long, value_enum, default_value = "siler")]
        method: GridArg,
    },
    /// Export or run the recognizer automaton.
    Dfa {
        #[command(subcommand)]
        action: DfaAction,
    },
    /// Cross-check every closed form against exhaustive search.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum DfaAction {
    /// Graphviz DOT text.
    Export {
        #[arg(long)]
        minimized: bool,
    },
    /// Run a word and print the visited states.
    Run {
        word: String,
        #[arg(long)]
        minimized: bool,
    },
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Evaluates a parsed command into a record and an exit code.
pub fn evaluate(command: &Command) -> Result<(OutputRecord, i32), UsageError> {
    let started = Instant::now();
    let (mut record, code) = match command {
        Command::Check { sequence, variant } => (check(sequence, (*variant).into())?, EXIT_OK),
        Command::Solve {
            sequence,
            variant,
            method,
        } => (solve(sequence, (*variant).into(), *method)?, EXIT_OK),
        Command::Count { n, method } => {
            let mut rec = OutputRecord::new("count", n.to_string());
            let method: CountMethod = (*method).into();
            rec.method = Some(method.to_string());
            rec.count = Some(count_removable(*n, method)?.to_string());
            (rec, EXIT_OK)
        }
        Command::Game { sequence } => {
            let config: GappedLinearConfig = sequence.parse()?;
            let mut solver = GameSolver::new();
            let mut rec = OutputRecord::new("game", sequence.clone());
            rec.variant = Some(Variant::LineGaps.to_string());
            rec.winner = Some(solver.outcome(&config)?);
            rec.winning_moves = Some(solver.winning_moves(&config)?);
            (rec, EXIT_OK)
        }
        Command::Grid { grid, method } => (grid_command(grid, *method)?, EXIT_OK),
        Command::Dfa { action } => (dfa_command(action)?, EXIT_OK),
        Command::Verify { max_len, seed } => {
            if *max_len > MAX_VERIFY_LEN {
                return Err(usage(format!(
                    "--max-len {max_len} exceeds the limit of {MAX_VERIFY_LEN}"
                )));
            }
            let suites = run_all(*max_len, *seed);
            let passed = suites.iter().all(|s| s.passed);
            let mut rec = OutputRecord::new("verify", max_len.to_string());
            rec.detail = Some(format!("seed {seed}"));
            rec.suites = Some(suites);
            (rec, if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    };
    record.elapsed_us = started.elapsed().as_micros() as u64;
    Ok((record, code))
}

fn check(sequence: &str, variant: Variant) -> Result<OutputRecord, UsageError> {
    let seq: LinearConfig = sequence.parse()?;
    let mut rec = OutputRecord::new("check", sequence);
    rec.variant = Some(variant.to_string());
    rec.removable = Some(is_removable(variant, &seq));
    if variant == Variant::LineNoGaps && seq.has_heads() {
        let sum = parity_sum(&seq)?;
        rec.parity_sum = Some(sum.value);
        rec.residue = Some(sum.residue);
        rec.parity_expression = Some(parity_sum_compressed(&seq)?.expression());
    }
    Ok(rec)
}

fn solve(
    sequence: &str,
    variant: Variant,
    method: Option<SolveArg>,
) -> Result<OutputRecord, UsageError> {
    let seq: LinearConfig = sequence.parse()?;
    let method = method.unwrap_or(if variant == Variant::LineNoGaps {
        SolveArg::Greedy
    } else {
        SolveArg::Search
    });
    let mut rec = OutputRecord::new("solve", sequence);
    rec.variant = Some(variant.to_string());
    match method {
        SolveArg::Greedy => {
            if variant != Variant::LineNoGaps {
                return Err(usage("the greedy method only applies to line-nogaps"));
            }
            rec.method = Some("greedy".into());
            match greedy_solve(&seq) {
                Ok(sol) => {
                    rec.removable = Some(true);
                    rec = rec.with_trace(&sol.trace);
                }
                Err(stuck) => {
                    rec.removable = Some(false);
                    rec.detail = Some(stuck.to_string());
                }
            }
        }
        SolveArg::Search => {
            rec.method = Some("search".into());
            let result = VariantOracle::new().solve(variant, &seq)?;
            rec.removable = Some(result.removable);
            rec.detail = Some(format!("{} states explored", result.states_explored));
            if let Some(trace) = &result.trace {
                rec = rec.with_trace(trace);
            }
        }
    }
    Ok(rec)
}

fn grid_command(text: &str, method: GridArg) -> Result<OutputRecord, UsageError> {
    let g: Grid = text.parse()?;
    let mut rec = OutputRecord::new("grid", text);
    match method {
        GridArg::Siler => {
            rec.method = Some("siler".into());
            rec.removable = Some(siler_predicate(&g)?);
        }
        GridArg::Brute => {
            rec.method = Some("brute".into());
            let result = grid_removable_bruteforce(&g)?;
            rec.removable = Some(result.removable);
            if let Some(trace) = &result.trace {
                rec = rec.with_trace(trace);
            }
        }
    }
    Ok(rec)
}

fn dfa_command(action: &DfaAction) -> Result<OutputRecord, UsageError> {
    let pick = |minimized: bool| {
        let dfa = build_recognizer();
        if minimized {
            dfa.minimize()
        } else {
            dfa
        }
    };
    match action {
        DfaAction::Export { minimized } => {
            let dfa = pick(*minimized);
            let mut rec = OutputRecord::new("dfa export", "");
            rec.detail = Some(format!("{} states", dfa.state_count()));
            rec.dot = Some(export_dot(&dfa));
            Ok(rec)
        }
        DfaAction::Run { word, minimized } => {
            let dfa = pick(*minimized);
            let run = dfa.run(word)?;
            let mut rec = OutputRecord::new("dfa run", word.clone());
            rec.accepted = Some(run.accepted);
            rec.path = Some(run.path.iter().map(|&s| dfa.label(s).to_string()).collect());
            Ok(rec)
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// record to `out`. Returns the process exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match evaluate(&cli.command) {
        Ok((record, code)) => {
            let text = if cli.json {
                record.to_json() + "\n"
            } else {
                record.to_human()
            };
            let _ = write!(out, "{text}");
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
