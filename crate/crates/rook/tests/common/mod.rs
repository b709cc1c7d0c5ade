//! Shared test support: a brute-force rook placement counter, independent of
//! every computation route in the library.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rook::{Board, Polynomial};

/// Count k-rook placements by direct enumeration: walk the columns, either
/// skipping a column or placing a rook on one of its free-row 1-cells.
pub fn brute_force_rook_polynomial(b: &Board) -> Polynomial {
    let mut counts = vec![BigInt::zero(); b.rows().min(b.cols()) + 1];
    let mut used = vec![false; b.rows()];
    count_placements(b, 0, 0, &mut used, &mut counts);
    Polynomial::from_coeffs(counts)
}

fn count_placements(
    b: &Board,
    col: usize,
    placed: usize,
    used: &mut Vec<bool>,
    counts: &mut Vec<BigInt>,
) {
    if col == b.cols() {
        counts[placed] += BigInt::one();
        return;
    }
    count_placements(b, col + 1, placed, used, counts);
    for row in 0..b.rows() {
        if b.cell(col, row) && !used[row] {
            used[row] = true;
            count_placements(b, col + 1, placed + 1, used, counts);
            used[row] = false;
        }
    }
}
