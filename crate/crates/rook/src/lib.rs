//! Rook polynomials of generalized and Ferrers boards, exactly.
//!
//! A board is a set of cells in rows and columns; its rook polynomial is the
//! generating function `sum r_k x^k` where `r_k` counts placements of k
//! non-attacking rooks. This crate computes rook polynomials by several
//! independent routes and solves the inverse problem on Ferrers boards:
//! given an integer polynomial, decide whether it is the rook polynomial of
//! a Ferrers board and reconstruct the unique increasing Ferrers board
//! realizing it.
//!
//! All arithmetic is exact, over arbitrary-precision integers.

pub mod boards;
pub mod inverse;
pub mod polynomial;
pub mod rookpoly;

pub use boards::{
    enumerate_ferrers, enumerate_increasing_ferrers, Board, BoardError, FerrersBoard,
    StructureData,
};
pub use inverse::{
    canonical_increasing, rook_equivalent, solve_inverse, CanonError, InverseOutcome,
    InverseSolution, Rejection,
};
pub use polynomial::{Polynomial, PolynomialError, RootMultiset};
pub use rookpoly::{
    check_necessary_conditions, factorial_rook_polynomial, rook_polynomial_ferrers,
    rook_polynomial_general, rook_polynomial_recursive, NecessityReport, RookError, Violation,
};
