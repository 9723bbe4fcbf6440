//! Finite automata over `{0, 1}` and the recognizer for removable no-gaps
//! sequences.

mod count;
mod dot;
mod minimize;

use std::collections::{HashMap, VecDeque};

use crate::coin::CoinState;
use crate::error::{Error, Result};
use crate::parity::ParityStream;

pub use count::{
    adjacency_matrix, count_removable, recurrence_r, relabeling_to, BigMatrix, CountMatrix,
    CountMethod, CountSequences, ENUMERATE_LIMIT, PRINTED_MATRIX,
};
pub use dot::export_dot;

/// A complete DFA. States are `0..state_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    transitions: Vec<[usize; 2]>,
    start: usize,
    accepting: Vec<bool>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub accepted: bool,
    pub path: Vec<usize>,
}

fn symbol_index(ch: char, offset: usize) -> Result<usize> {
    match ch {
        '0' => Ok(0),
        '1' => Ok(1),
        _ => Err(Error::InvalidSymbol { ch, offset }),
    }
}

impl Dfa {
    /// `transitions[s][b]` is the target of state `s` on symbol `b`.
    pub fn new(transitions: Vec<[usize; 2]>, start: usize, accepting: Vec<bool>) -> Result<Self> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if start >= n {
            return Err(Error::InvalidAutomaton(format!(
                "start {start} out of range"
            )));
        }
        if accepting.len() != n {
            return Err(Error::InvalidAutomaton(format!(
                "{} accept flags for {n} states",
                accepting.len()
            )));
        }
        if let Some((s, t)) = transitions
            .iter()
            .enumerate()
            .find_map(|(s, row)| row.iter().find(|&&t| t >= n).map(|&t| (s, t)))
        {
            return Err(Error::InvalidAutomaton(format!(
                "state {s} has a transition to missing state {t}"
            )));
        }
        let labels = (0..n).map(|s| s.to_string()).collect();
        Ok(Dfa {
            transitions,
            start,
            accepting,
            labels,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.state_count(), "one label per state");
        self.labels = labels;
        self
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count())
            .filter(|&s| self.accepting[s])
            .collect()
    }

    pub fn label(&self, state: usize) -> &str {
        &self.labels[state]
    }

    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.transitions[state][symbol]
    }

    /// Follows `word` from the start state, recording every state visited.
    pub fn run(&self, word: &str) -> Result<Run> {
        let mut path = Vec::with_capacity(word.len() + 1);
        let mut state = self.start;
        path.push(state);
        for (offset, ch) in word.chars().enumerate() {
            state = self.next(state, symbol_index(ch, offset)?);
            path.push(state);
        }
        Ok(Run {
            accepted: self.accepting[state],
            path,
        })
    }

    /// Acceptance for a word given as the low `len` bits of `bits`, most
    /// significant first.
    pub fn accepts_bits(&self, bits: u64, len: usize) -> bool {
        let state = (0..len).fold(self.start, |s, i| {
            self.next(s, (bits >> (len - 1 - i) & 1) as usize)
        });
        self.accepting[state]
    }

    /// States reachable from the start, in breadth-first order (symbol 0
    /// explored before 1).
    pub fn reachable_states(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut k = 0;
        while k < order.len() {
            let s = order[k];
            for &t in &self.transitions[s] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            k += 1;
        }
        order
    }

    /// Decides language equality by exploring the product automaton.
    pub fn language_equivalent(&self, other: &Dfa) -> bool {
        let mut seen = HashMap::new();
        let mut queue = VecDeque::from([(self.start, other.start)]);
        seen.insert((self.start, other.start), ());
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                return false;
            }
            for b in 0..2 {
                let pair = (self.next(p, b), other.next(q, b));
                if seen.insert(pair, ()).is_none() {
                    queue.push_back(pair);
                }
            }
        }
        true
    }

    pub fn minimize(&self) -> Dfa {
        minimize::minimize(self)
    }
}

/// The automaton that evaluates the parity sum mod 3 left to right: eight
/// reachable states, (running sum mod 3, tails parity) once a head has been
/// read plus two states for leading tails. It accepts when a head was seen
/// and the residue is 0 or 1.
pub fn build_recognizer() -> Dfa {
    let start = ParityStream::default();
    let mut index: HashMap<ParityStream, usize> = HashMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut transitions: Vec<[usize; 2]> = Vec::new();
    let mut k = 0;
    while k < states.len() {
        let s = states[k];
        let mut row = [0; 2];
        for (b, coin) in [CoinState::Tails, CoinState::Heads].into_iter().enumerate() {
            let t = s.push(coin);
            let next_id = states.len();
            row[b] = *index.entry(t).or_insert_with(|| {
                states.push(t);
                next_id
            });
        }
        transitions.push(row);
        k += 1;
    }
    let accepting = states
        .iter()
        .map(|s| matches!(s.residue(), Some(r) if r != 2))
        .collect();
    let labels = states
        .iter()
        .map(|s| {
            if s.seen_heads {
                format!("v{}c{}", s.acc, s.zeros)
            } else {
                format!("z{}", s.zeros)
            }
        })
        .collect();
    Dfa::new(transitions, 0, accepting)
        .expect("recognizer is complete by construction")
        .with_labels(labels)
}
