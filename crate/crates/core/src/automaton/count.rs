use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{build_recognizer, Dfa};
use crate::config::LinearConfig;
use crate::error::{Error, Result};
use crate::parity::is_removable_linear_no_gaps;

/// Adjacency matrix of the published five-state minimal recognizer; row 1
/// is the start, rows 2 and 4 accept.
pub const PRINTED_MATRIX: [[u64; 5]; 5] = [
    [0, 1, 0, 0, 1],
    [0, 1, 1, 0, 0],
    [0, 0, 0, 2, 0],
    [0, 1, 1, 0, 0],
    [1, 0, 0, 1, 0],
];

/// Largest length accepted by [`CountMethod::Enumerate`].
pub const ENUMERATE_LIMIT: u64 = 20;

/// `entries[i][j]` = number of symbols taking state `i` to state `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    entries: Vec<Vec<u64>>,
}

pub type BigMatrix = Vec<Vec<BigUint>>;

impl CountMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Self {
        CountMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    fn to_big(&self) -> BigMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
            .collect()
    }

    /// `M^k` by repeated squaring, in exact arithmetic.
    pub fn power(&self, mut k: u64) -> BigMatrix {
        let n = self.size();
        let mut result = identity(n);
        let mut base = self.to_big();
        while k > 0 {
            if k & 1 == 1 {
                result = multiply(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = multiply(&base, &base);
            }
        }
        result
    }

    /// The matrix with rows and columns moved: entry `(perm[i], perm[j])` of
    /// the result is entry `(i, j)` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> CountMatrix {
        let n = self.size();
        let mut entries = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i]][perm[j]] = self.entries[i][j];
            }
        }
        CountMatrix { entries }
    }
}

impl fmt::Display for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

fn identity(n: usize) -> BigMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn multiply(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn adjacency_matrix(dfa: &Dfa) -> CountMatrix {
    let n = dfa.state_count();
    let mut entries = vec![vec![0u64; n]; n];
    for (s, row) in entries.iter_mut().enumerate() {
        for b in 0..2 {
            row[dfa.next(s, b)] += 1;
        }
    }
    CountMatrix { entries }
}

/// Searches for a relabeling `perm` (state → row of `target`) that sends the
/// start to `start_row`, the accepting states onto `accept_rows`, and makes
/// the adjacency matrix of `dfa` equal to `target`.
pub fn relabeling_to(
    dfa: &Dfa,
    target: &[Vec<u64>],
    start_row: usize,
    accept_rows: &[usize],
) -> Option<Vec<usize>> {
    let n = dfa.state_count();
    if target.len() != n || target.iter().any(|r| r.len() != n) {
        return None;
    }
    let matrix = adjacency_matrix(dfa);
    (0..n).permutations(n).find(|perm| {
        if perm[dfa.start()] != start_row {
            return false;
        }
        let mut mapped: Vec<usize> = dfa.accepting_states().iter().map(|&s| perm[s]).collect();
        mapped.sort_unstable();
        let mut wanted = accept_rows.to_vec();
        wanted.sort_unstable();
        mapped == wanted && matrix.permuted(perm).entries() == target
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    /// Row sums of powers of the minimized recognizer's adjacency matrix.
    Matrix,
    /// `r_{n+1} = r_n + 2 r_{n-1} + 1`.
    Recurrence,
    /// Tests every word of length `n` with the parity-sum predicate.
    Enumerate,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Matrix => "matrix",
            CountMethod::Recurrence => "recurrence",
            CountMethod::Enumerate => "enumerate",
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matrix" => Ok(CountMethod::Matrix),
            "recurrence" => Ok(CountMethod::Recurrence),
            "enumerate" => Ok(CountMethod::Enumerate),
            _ => Err(format!(
                "unknown method {s:?}; expected matrix, recurrence or enumerate"
            )),
        }
    }
}

/// Number of removable no-gaps sequences of length `n`.
///
/// Every method returns 0 for `n = 0`: the recognizer rejects the empty
/// word, even though the solver treats the empty line as already cleared.
pub fn count_removable(n: u64, method: CountMethod) -> Result<BigUint> {
    match method {
        CountMethod::Matrix => {
            let dfa = build_recognizer().minimize();
            let power = adjacency_matrix(&dfa).power(n);
            Ok(dfa
                .accepting_states()
                .iter()
                .map(|&j| &power[dfa.start()][j])
                .sum())
        }
        CountMethod::Recurrence => Ok(recurrence_r(n).r[n as usize].clone()),
        CountMethod::Enumerate => {
            if n > ENUMERATE_LIMIT {
                return Err(Error::MethodRangeExceeded {
                    method: "enumerate",
                    n,
                    limit: ENUMERATE_LIMIT,
                });
            }
            if n == 0 {
                return Ok(BigUint::zero());
            }
            let count = LinearConfig::all_of_length(n as usize)
                .filter(is_removable_linear_no_gaps)
                .count();
            Ok(BigUint::from(count))
        }
    }
}

/// `r_n` and the first row `(a_n, b_n, c_n, d_n, e_n)` of `M^n`, indexed
/// by `n` from 0 (where the row is `(1, 0, 0, 0, 0)` and `r_0 = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequences {
    pub r: Vec<BigUint>,
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
    pub c: Vec<BigUint>,
    pub d: Vec<BigUint>,
    pub e: Vec<BigUint>,
}

impl CountSequences {
    pub fn up_to(&self) -> usize {
        self.r.len() - 1
    }
}

/// `r_1 = 1`, `r_2 = 2`, `r_{n+1} = r_n + 2 r_{n-1} + 1`, alongside
///
/// ```text
/// a' = e,  b' = a + b + d,  c' = b + d,  d' = 2c + e,  e' = a
/// ```
///
/// from `a_1 = c_1 = d_1 = 0`, `b_1 = e_1 = 1`.
pub fn recurrence_r(up_to: u64) -> CountSequences {
    let len = up_to as usize + 1;
    let mut r = vec![BigUint::zero()];
    for n in 1..len {
        let next = match n {
            1 => BigUint::one(),
            2 => BigUint::from(2u32),
            _ => &r[n - 1] + &r[n - 2] * 2u32 + 1u32,
        };
        r.push(next);
    }

    let mut a = vec![BigUint::zero()];
    let mut b = vec![BigUint::zero()];
    let mut c = vec![BigUint::zero()];
    let mut d = vec![BigUint::zero()];
    let mut e = vec![BigUint::zero()];
    if len > 1 {
        a.push(BigUint::zero());
        b.push(BigUint::one());
        c.push(BigUint::zero());
        d.push(BigUint::zero());
        e.push(BigUint::one());
    }
    for n in 1..len.saturating_sub(1) {
        a.push(e[n].clone());
        b.push(&a[n] + &b[n] + &d[n]);
        c.push(&b[n] + &d[n]);
        d.push(&c[n] * 2u32 + &e[n]);
        e.push(a[n].clone());
    }
    // n = 0 is the first row of the identity.
    a[0] = BigUint::one();

    CountSequences { r, a, b, c, d, e }
}
