//! Rectangular grids: removing a coin flips its horizontal and vertical
//! neighbours, and gaps stay where they are.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coin::Cell;
use crate::config::{GappedLinearConfig, Puzzle};
use crate::error::{Error, Result};
use crate::solver::{Oracle, SearchResult};

/// Largest grid (in cells) the exhaustive search accepts.
pub const GRID_SEARCH_LIMIT: usize = 12;

/// 1-based cell coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GridPos {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for GridPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl Grid {
    pub fn new(rows: usize, cols: usize, cells: Vec<Cell>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInputWhereForbidden("grids"));
        }
        if cells.len() != rows * cols {
            return Err(Error::RaggedGrid {
                row: cells.len() / cols + 1,
                found: cells.len() % cols,
                expected: cols,
            });
        }
        Ok(Grid { rows, cols, cells })
    }

    /// The grid whose cells, read row by row, are the low `rows * cols` bits
    /// of `bits` (most significant first).
    pub fn from_bits(rows: usize, cols: usize, bits: u64) -> Self {
        let n = rows * cols;
        let cells = (0..n)
            .map(|i| {
                if bits >> (n - 1 - i) & 1 == 1 {
                    Cell::Heads
                } else {
                    Cell::Tails
                }
            })
            .collect();
        Grid { rows, cols, cells }
    }

    /// All `2^(rows*cols)` gap-free grids of the given shape.
    pub fn all_of_shape(rows: usize, cols: usize) -> impl Iterator<Item = Grid> {
        (0..1u64 << (rows * cols)).map(move |bits| Grid::from_bits(rows, cols, bits))
    }

    pub fn from_line(line: &GappedLinearConfig) -> Self {
        Grid {
            rows: 1,
            cols: line.len(),
            cells: line.cells().to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<Cell> {
        if row == 0 || col == 0 || row > self.rows || col > self.cols {
            return None;
        }
        Some(self.cells[(row - 1) * self.cols + (col - 1)])
    }

    pub fn heads_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_heads()).count()
    }

    pub fn has_gaps(&self) -> bool {
        self.cells.iter().any(|c| !c.has_coin())
    }

    fn row_cells(&self, r: usize) -> &[Cell] {
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }

    pub fn apply_move_grid(&self, row: usize, col: usize) -> Result<Self> {
        let cell = self.cell(row, col).ok_or(Error::PositionOutOfRange {
            pos: (row.max(1) - 1) * self.cols + col,
            len: self.cells.len(),
        })?;
        if !cell.is_heads() {
            return Err(Error::CoinNotHeads {
                pos: (row - 1) * self.cols + col,
            });
        }
        let (r, c) = (row - 1, col - 1);
        let mut cells = self.cells.clone();
        cells[r * self.cols + c] = Cell::Empty;
        let neighbours = [
            (r.wrapping_sub(1), c),
            (r + 1, c),
            (r, c.wrapping_sub(1)),
            (r, c + 1),
        ];
        for (nr, nc) in neighbours {
            if nr < self.rows && nc < self.cols {
                let k = nr * self.cols + nc;
                cells[k] = cells[k].flipped();
            }
        }
        Ok(Grid {
            rows: self.rows,
            cols: self.cols,
            cells,
        })
    }

    /// Two rows, even width, both end columns tails and each row's interior
    /// made of `00` / `11` pairs.
    pub fn in_excluded_family(&self) -> bool {
        if self.rows != 2 || !self.cols.is_multiple_of(2) {
            return false;
        }
        (0..self.rows).all(|r| {
            let row = self.row_cells(r);
            let interior = &row[1..self.cols - 1];
            row[0] == Cell::Tails
                && row[self.cols - 1] == Cell::Tails
                && interior
                    .chunks(2)
                    .all(|pair| pair[0] == pair[1] && pair[0].has_coin())
        })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("/")?;
            }
            for cell in self.row_cells(r) {
                write!(f, "{cell}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyInputWhereForbidden("grids"));
        }
        let mut cells = Vec::new();
        let mut cols = None;
        let mut offset = 0;
        let mut rows = 0;
        for (r, row) in s.split('/').enumerate() {
            let before = cells.len();
            for ch in row.chars() {
                cells.push(Cell::from_symbol(ch, offset)?);
                offset += 1;
            }
            offset += 1;
            let width = cells.len() - before;
            let expected = *cols.get_or_insert(width);
            if width != expected || width == 0 {
                return Err(Error::RaggedGrid {
                    row: r + 1,
                    found: width,
                    expected,
                });
            }
            rows += 1;
        }
        Grid::new(rows, cols.unwrap_or(0), cells)
    }
}

impl Puzzle for Grid {
    type Pos = GridPos;

    fn legal_moves(&self) -> Vec<GridPos> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_heads())
            .map(|(k, _)| GridPos {
                row: k / self.cols + 1,
                col: k % self.cols + 1,
            })
            .collect()
    }

    fn apply_move(&self, pos: GridPos) -> Result<Self> {
        self.apply_move_grid(pos.row, pos.col)
    }

    fn coin_count(&self) -> usize {
        self.cells.iter().filter(|c| c.has_coin()).count()
    }

    fn size(&self) -> usize {
        self.cells.len()
    }
}

pub fn grid_removable_bruteforce(g: &Grid) -> Result<SearchResult<GridPos>> {
    Oracle::new(GRID_SEARCH_LIMIT).solve(g)
}

/// Siler's characterization. Odd width: removable iff the number of heads
/// is odd. Two rows and even width: removable iff the number of heads is
/// even and nonzero and the grid is not in the excluded family.
pub fn siler_predicate(g: &Grid) -> Result<bool> {
    if g.has_gaps() {
        return Err(Error::InvalidCharacter {
            ch: '.',
            offset: g.to_string().find('.').unwrap_or(0),
        });
    }
    let heads = g.heads_count();
    if g.cols() % 2 == 1 {
        Ok(heads % 2 == 1)
    } else if g.rows() == 2 {
        Ok(heads > 0 && heads.is_multiple_of(2) && !g.in_excluded_family())
    } else {
        Err(Error::UnsupportedShape {
            rows: g.rows(),
            cols: g.cols(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(s: &str) -> Grid {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        let g = grid("1010/0101");
        assert_eq!((g.rows(), g.cols()), (2, 4));
        assert_eq!(g.to_string(), "1010/0101");
        assert_eq!(g.cell(2, 2), Some(Cell::Heads));
        assert_eq!(g.cell(3, 1), None);
        assert!(matches!(
            "10/1".parse::<Grid>(),
            Err(Error::RaggedGrid { row: 2, .. })
        ));
        assert!(matches!(
            "".parse::<Grid>(),
            Err(Error::EmptyInputWhereForbidden(_))
        ));
        assert!(matches!(
            "10/".parse::<Grid>(),
            Err(Error::RaggedGrid { .. })
        ));
        assert!(matches!(
            "1x/01".parse::<Grid>(),
            Err(Error::InvalidCharacter { ch: 'x', offset: 1 })
        ));
    }

    #[test]
    fn moves_flip_orthogonal_coins() {
        assert_eq!(
            grid("1010/0101").apply_move_grid(1, 1).unwrap(),
            grid(".110/1101")
        );
        assert_eq!(grid("1").apply_move_grid(1, 1).unwrap(), grid("."));
        assert_eq!(
            grid("010/111/010").apply_move_grid(2, 2).unwrap(),
            grid("000/0.0/000")
        );
        assert_eq!(grid(".1/00").apply_move_grid(1, 2).unwrap(), grid("../01"));
        assert!(matches!(
            grid("01").apply_move_grid(1, 1),
            Err(Error::CoinNotHeads { .. })
        ));
        assert!(matches!(
            grid("01").apply_move_grid(2, 1),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn published_two_by_four_examples() {
        let yes = grid("1010/0101");
        let res = grid_removable_bruteforce(&yes).unwrap();
        assert!(res.removable);
        res.trace.unwrap().replay(&yes).unwrap();
        assert!(siler_predicate(&yes).unwrap());

        let no = grid("0110/0000");
        assert!(!grid_removable_bruteforce(&no).unwrap().removable);
        assert!(no.in_excluded_family());
        assert!(!siler_predicate(&no).unwrap());
    }

    #[test]
    fn odd_width_and_zero_grids() {
        assert!(siler_predicate(&grid("101/010")).unwrap());
        assert!(
            grid_removable_bruteforce(&grid("101/010"))
                .unwrap()
                .removable
        );
        assert!(
            !grid_removable_bruteforce(&grid("000/000"))
                .unwrap()
                .removable
        );
    }

    #[test]
    fn unsupported_inputs() {
        assert!(matches!(
            siler_predicate(&grid("10/01/11")),
            Err(Error::UnsupportedShape { rows: 3, cols: 2 })
        ));
        assert!(siler_predicate(&grid("1./01")).is_err());
        assert!(matches!(
            grid_removable_bruteforce(&grid("1111111/1111111")),
            Err(Error::SizeGuardExceeded {
                size: 14,
                limit: 12
            })
        ));
    }
}
