//! Board representations: general binary-matrix boards and Ferrers boards
//! given by nondecreasing height vectors, plus structure-vector computation
//! and exhaustive enumeration of small boards.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("heights are not nondecreasing at index {index}")]
    NotNondecreasing { index: usize },
    #[error("negative height at index {index}")]
    NegativeHeight { index: usize },
    #[error("padding length {n} is smaller than the column count {c}")]
    PaddingTooSmall { n: usize, c: usize },
    #[error("board has no cells")]
    EmptyBoard,
    #[error("cell ({col}, {row}) lies outside a {rows}x{cols} board")]
    CellOutOfRange {
        col: usize,
        row: usize,
        rows: usize,
        cols: usize,
    },
}

/// A generalized board: an m x n binary matrix. Column index runs
/// left-to-right, row index bottom-to-top from the common lower edge.
/// The 0 x 0 board is the distinguished empty board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl Board {
    pub fn empty() -> Self {
        Board {
            rows: 0,
            cols: 0,
            cells: Vec::new(),
        }
    }

    /// All-ones board.
    pub fn full(rows: usize, cols: usize) -> Self {
        Board {
            rows,
            cols,
            cells: vec![true; rows * cols],
        }
    }

    /// Build from a sparse list of 1-cells with 1-based (column, row) indices.
    pub fn from_ones(rows: usize, cols: usize, ones: &[(usize, usize)]) -> Result<Self, BoardError> {
        let mut b = Board {
            rows,
            cols,
            cells: vec![false; rows * cols],
        };
        for &(col, row) in ones {
            if col == 0 || row == 0 || col > cols || row > rows {
                return Err(BoardError::CellOutOfRange {
                    col,
                    row,
                    rows,
                    cols,
                });
            }
            b.cells[(col - 1) * rows + (row - 1)] = true;
        }
        Ok(b)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based cell lookup.
    pub fn cell(&self, col: usize, row: usize) -> bool {
        self.cells[col * self.rows + row]
    }

    pub fn set_cell(&mut self, col: usize, row: usize, value: bool) {
        self.cells[col * self.rows + row] = value;
    }

    pub fn one_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// The 1-cells as 0-based (column, row) pairs.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.one_count());
        for col in 0..self.cols {
            for row in 0..self.rows {
                if self.cell(col, row) {
                    out.push((col, row));
                }
            }
        }
        out
    }
}

/// A Ferrers board, stored canonically as its nonzero column heights
/// (nondecreasing, all >= 1). Zero-height padding columns are a presentation
/// device and are reconstructed on demand by [`FerrersBoard::structure_data`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    heights: Vec<u64>,
}

/// Padded height and structure vectors of a Ferrers board for a chosen n:
/// `n_heights[i] = 0` for the first n - c entries and the stored heights
/// after that; `n_structure[i] = n_heights[i] - i` (0-based i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureData {
    pub n: usize,
    pub n_heights: Vec<u64>,
    pub n_structure: Vec<i64>,
}

impl FerrersBoard {
    pub fn empty() -> Self {
        FerrersBoard { heights: Vec::new() }
    }

    /// Validate a height sequence and strip leading zero-height columns.
    pub fn from_heights(heights: &[i64]) -> Result<Self, BoardError> {
        for (i, &h) in heights.iter().enumerate() {
            if h < 0 {
                return Err(BoardError::NegativeHeight { index: i });
            }
            if i + 1 < heights.len() && heights[i + 1] < h {
                return Err(BoardError::NotNondecreasing { index: i });
            }
        }
        let stripped: Vec<u64> = heights
            .iter()
            .filter(|&&h| h > 0)
            .map(|&h| h as u64)
            .collect();
        Ok(FerrersBoard { heights: stripped })
    }

    /// Construction from already-validated positive nondecreasing heights.
    pub(crate) fn from_parts(heights: Vec<u64>) -> Self {
        debug_assert!(heights.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(heights.first().map_or(true, |&h| h > 0));
        FerrersBoard { heights }
    }

    /// Nonzero column heights, nondecreasing.
    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    /// Number of (nonzero) columns c.
    pub fn column_count(&self) -> usize {
        self.heights.len()
    }

    pub fn cell_count(&self) -> u64 {
        self.heights.iter().sum()
    }

    /// True iff the heights are strictly increasing; the empty board is
    /// vacuously increasing.
    pub fn is_increasing(&self) -> bool {
        self.heights.windows(2).all(|w| w[0] < w[1])
    }

    /// The n-height vector and n-structure vector for padding length n >= c.
    pub fn structure_data(&self, n: usize) -> Result<StructureData, BoardError> {
        let c = self.column_count();
        if n < c {
            return Err(BoardError::PaddingTooSmall { n, c });
        }
        let mut n_heights = vec![0u64; n - c];
        n_heights.extend_from_slice(&self.heights);
        let n_structure = n_heights
            .iter()
            .enumerate()
            .map(|(i, &h)| h as i64 - i as i64)
            .collect();
        Ok(StructureData {
            n,
            n_heights,
            n_structure,
        })
    }

    /// Expand into the binary matrix with column i holding h_i ones from the
    /// common lower edge.
    pub fn as_board(&self) -> Result<Board, BoardError> {
        let c = self.column_count();
        let Some(&max_h) = self.heights.last() else {
            return Err(BoardError::EmptyBoard);
        };
        let mut b = Board {
            rows: max_h as usize,
            cols: c,
            cells: vec![false; max_h as usize * c],
        };
        for (col, &h) in self.heights.iter().enumerate() {
            for row in 0..h as usize {
                b.set_cell(col, row, true);
            }
        }
        Ok(b)
    }
}

/// All increasing Ferrers boards with exactly `total_cells` cells, i.e. the
/// partitions of `total_cells` into distinct positive parts, in
/// lexicographically increasing height-vector order.
pub fn enumerate_increasing_ferrers(total_cells: u64) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    distinct_parts(1, total_cells, &mut prefix, &mut out);
    out
}

fn distinct_parts(min: u64, remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<FerrersBoard>) {
    if remaining == 0 {
        out.push(FerrersBoard::from_parts(prefix.clone()));
        return;
    }
    for part in min..=remaining {
        prefix.push(part);
        distinct_parts(part + 1, remaining - part, prefix, out);
        prefix.pop();
    }
}

/// All Ferrers boards (nondecreasing heights, repeats allowed) with exactly
/// `total_cells` cells, in lexicographically increasing height-vector order.
pub fn enumerate_ferrers(total_cells: u64) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    parts(1, total_cells, &mut prefix, &mut out);
    out
}

fn parts(min: u64, remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<FerrersBoard>) {
    if remaining == 0 {
        out.push(FerrersBoard::from_parts(prefix.clone()));
        return;
    }
    for part in min..=remaining {
        prefix.push(part);
        parts(part, remaining - part, prefix, out);
        prefix.pop();
    }
}
