//! Rook polynomial computation by three independent routes: subset dynamic
//! programming over rows, cell-decomposition recursion, and the structure
//! vector factorization for Ferrers boards. Also the coefficient
//! necessary-condition checker.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::boards::{Board, BoardError, FerrersBoard};
use crate::polynomial::Polynomial;

/// Width guard for the subset DP: masks range over the rows.
pub const MAX_DP_ROWS: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RookError {
    #[error("board has {rows} rows; the subset DP supports at most {MAX_DP_ROWS}")]
    TooManyRows { rows: usize },
}

/// Rook polynomial of an arbitrary binary-matrix board, by column-by-column
/// dynamic programming over subsets of occupied rows.
pub fn rook_polynomial_general(b: &Board) -> Result<Polynomial, RookError> {
    let m = b.rows();
    if m > MAX_DP_ROWS {
        return Err(RookError::TooManyRows { rows: m });
    }
    let mut dp = vec![BigInt::zero(); 1usize << m];
    dp[0] = BigInt::one();
    for col in 0..b.cols() {
        let prev = dp.clone();
        for (mask, ways) in prev.iter().enumerate() {
            if ways.is_zero() {
                continue;
            }
            for row in 0..m {
                if b.cell(col, row) && mask & (1 << row) == 0 {
                    dp[mask | (1 << row)] += ways;
                }
            }
        }
    }
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for (mask, ways) in dp.into_iter().enumerate() {
        coeffs[mask.count_ones() as usize] += ways;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Rook polynomial by the cell decomposition
/// `R(B) = R(B - cell) + x * R(B - cell's row and column)`,
/// expanding at the highest cell of the rightmost nonempty column.
///
/// Memoized per call; retained as an independent oracle for
/// [`rook_polynomial_general`].
pub fn rook_polynomial_recursive(b: &Board) -> Polynomial {
    let cells: BTreeSet<(usize, usize)> = b.ones().into_iter().collect();
    let mut memo = HashMap::new();
    decompose(&cells, &mut memo)
}

fn decompose(
    cells: &BTreeSet<(usize, usize)>,
    memo: &mut HashMap<BTreeSet<(usize, usize)>, Polynomial>,
) -> Polynomial {
    if cells.is_empty() {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(cells) {
        return p.clone();
    }
    // BTreeSet order is (col, row), so the last element is the highest cell
    // of the rightmost nonempty column.
    let &(col, row) = cells.iter().next_back().unwrap();
    let mut without_cell = cells.clone();
    without_cell.remove(&(col, row));
    let without_lines: BTreeSet<(usize, usize)> = cells
        .iter()
        .filter(|&&(c, r)| c != col && r != row)
        .copied()
        .collect();
    let p = &decompose(&without_cell, memo) + &(&Polynomial::x() * &decompose(&without_lines, memo));
    memo.insert(cells.clone(), p.clone());
    p
}

/// Rook polynomial of a Ferrers board via the structure-vector factorization:
/// expand `prod (x + s_i)` for n = c and convert out of the factorial basis.
pub fn rook_polynomial_ferrers(b: &FerrersBoard) -> Polynomial {
    let n = b.column_count();
    let p = factorial_rook_polynomial(b, n).expect("n = c is always a valid padding");
    let coeffs = p
        .from_factorial_basis(n)
        .expect("factorial product has degree n");
    Polynomial::from_coeffs(coeffs)
}

/// The n-factorial rook polynomial `p_n(B;x) = prod_{i=1}^{n} (x + s_i)`,
/// expanded in the monomial basis.
pub fn factorial_rook_polynomial(b: &FerrersBoard, n: usize) -> Result<Polynomial, BoardError> {
    let sd = b.structure_data(n)?;
    let mut p = Polynomial::one();
    for s in sd.n_structure {
        p = &p * &Polynomial::from_coeffs(vec![BigInt::from(s), BigInt::one()]);
    }
    Ok(p)
}

/// One violated coefficient condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Condition index, 1-6.
    pub condition: u8,
    pub description: String,
}

/// Result of checking the six coefficient conditions that every rook
/// polynomial satisfies. Condition 4 (r_1 equals the cell count) cannot be
/// falsified without a board, so it is recorded informationally as
/// `implied_cell_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityReport {
    pub violations: Vec<Violation>,
    /// The cell count r_1 any realizing board must have.
    pub implied_cell_count: BigInt,
}

impl NecessityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the necessary coefficient conditions on a candidate rook polynomial:
/// nonnegative coefficients, no internal zeros, r_0 = 1, r_k <= C(r_1, k),
/// and r_k <= C(r_{k-1}, 2). All violations are reported, not just the first.
pub fn check_necessary_conditions(q: &Polynomial) -> NecessityReport {
    let mut violations = Vec::new();
    let coeffs = q.coeffs();
    let r1 = q.coeff(1);

    for (k, c) in coeffs.iter().enumerate() {
        if c.is_negative() {
            violations.push(Violation {
                condition: 1,
                description: format!("r_{k} = {c} is negative"),
            });
        }
    }
    // Trailing zeros are trimmed, so any stored zero precedes a nonzero one.
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            violations.push(Violation {
                condition: 2,
                description: format!("r_{k} = 0 but a later coefficient is nonzero"),
            });
        }
    }
    if !q.coeff(0).is_one() {
        violations.push(Violation {
            condition: 3,
            description: format!("r_0 = {} instead of 1", q.coeff(0)),
        });
    }
    for (k, c) in coeffs.iter().enumerate() {
        let bound = binomial(&r1, k);
        if *c > bound {
            violations.push(Violation {
                condition: 5,
                description: format!("r_{k} = {c} exceeds C(r_1, {k}) = {bound}"),
            });
        }
    }
    for (k, c) in coeffs.iter().enumerate().skip(2) {
        let bound = binomial(&q.coeff(k - 1), 2);
        if *c > bound {
            violations.push(Violation {
                condition: 6,
                description: format!("r_{k} = {c} exceeds C(r_{}, 2) = {bound}", k - 1),
            });
        }
    }
    violations.sort_by_key(|v| v.condition);
    NecessityReport {
        violations,
        implied_cell_count: r1,
    }
}

/// Generalized binomial coefficient: `n(n-1)...(n-k+1) / k!` for integer n.
fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - BigInt::from(j as u64);
        den *= BigInt::from(j as u64 + 1);
    }
    num / den
}
