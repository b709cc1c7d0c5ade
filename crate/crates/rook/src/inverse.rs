//! The inverse problem: decide whether an integer polynomial is the rook
//! polynomial of a Ferrers board and reconstruct the unique increasing
//! Ferrers board when it is, plus canonicalization and rook equivalence.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::boards::FerrersBoard;
use crate::polynomial::{Polynomial, PolynomialError};
use crate::rookpoly::{check_necessary_conditions, rook_polynomial_ferrers, NecessityReport};

/// Successful reconstruction: the unique increasing Ferrers board realizing
/// the input polynomial, with the construction diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSolution {
    pub board: FerrersBoard,
    /// Padding length floor(sqrt(2 q_1)) used for the factorial form.
    pub n: usize,
    /// Largest root of the factorial form; -1 for the empty board.
    pub t: BigInt,
    /// Roots of p / (x)_{t+1}, nonincreasing; heights follow
    /// h_i = -u_i + t + i.
    pub u: Vec<BigInt>,
}

/// Typed rejection: the input is not the rook polynomial of any Ferrers
/// board, with the first pipeline stage that ruled it out.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rejection {
    #[error("degree {degree} exceeds the column bound {bound} = floor(sqrt(2 r_1))")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("necessary coefficient conditions failed")]
    NecessaryConditionFailed(NecessityReport),
    #[error("the factorial form does not split over the integers")]
    NonIntegerRoots,
    #[error("(x)_(t+1) does not divide the factorial form")]
    FallingFactorialNotDivisor,
    #[error("constructed board does not reproduce the input polynomial")]
    VerificationMismatch,
}

impl Rejection {
    /// Short machine-readable reason name.
    pub fn reason(&self) -> &'static str {
        match self {
            Rejection::DegreeExceedsBound { .. } => "DegreeExceedsBound",
            Rejection::NecessaryConditionFailed(_) => "NecessaryConditionFailed",
            Rejection::NonIntegerRoots => "NonIntegerRoots",
            Rejection::FallingFactorialNotDivisor => "FallingFactorialNotDivisor",
            Rejection::VerificationMismatch => "VerificationMismatch",
        }
    }

    /// Pipeline stage at which the input was ruled out.
    pub fn stage(&self) -> &'static str {
        match self {
            Rejection::NecessaryConditionFailed(_) => "necessary_conditions",
            Rejection::DegreeExceedsBound { .. } => "degree_bound",
            Rejection::NonIntegerRoots => "integer_roots",
            Rejection::FallingFactorialNotDivisor => "falling_factorial_divisibility",
            Rejection::VerificationMismatch => "verification",
        }
    }
}

pub type InverseOutcome = Result<InverseSolution, Rejection>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonicalization failed on a valid Ferrers board ({0}); this is a bug")]
    Internal(Rejection),
}

/// Decide whether `q` is the rook polynomial of a Ferrers board and build the
/// unique increasing board when it is.
///
/// Pipeline: coefficient prefilter, degree bound n = floor(sqrt(2 q_1)),
/// factorial form, complete integer root extraction, divisibility by
/// (x)_{t+1} for the largest root t, height construction h_i = -u_i + t + i
/// from the remaining roots in nonincreasing order, and a final recomputation
/// guard.
pub fn solve_inverse(q: &Polynomial) -> InverseOutcome {
    if q.is_one() {
        return Ok(InverseSolution {
            board: FerrersBoard::empty(),
            n: 0,
            t: BigInt::from(-1),
            u: Vec::new(),
        });
    }

    let report = check_necessary_conditions(q);
    if !report.passed() {
        return Err(Rejection::NecessaryConditionFailed(report));
    }

    // Past the prefilter, q_1 >= 1: the degree is >= 1 (q != 1, r_0 = 1) and
    // internal zeros are excluded.
    let q1 = q.coeff(1);
    let n = (BigInt::from(2) * &q1)
        .sqrt()
        .to_usize()
        .expect("column bound sqrt(2 q_1) fits in usize at any feasible scale");
    let degree = q.degree().expect("q is nonzero here");
    if degree > n {
        return Err(Rejection::DegreeExceedsBound { degree, bound: n });
    }

    let p = q
        .to_factorial_form(n)
        .expect("degree <= n was just checked");
    let mut roots = match p.integer_roots() {
        Ok(rs) => rs.roots,
        Err(PolynomialError::NotSplitting) => return Err(Rejection::NonIntegerRoots),
        Err(e) => unreachable!("factorial form of a unit-constant polynomial is monic: {e}"),
    };

    // Roots are nonincreasing, so the largest is first.
    let t = roots[0].clone();
    if !t.is_negative() {
        // (x)_{t+1} | p  <=>  each of 0..=t occurs among the roots.
        let mut j = BigInt::zero();
        while j <= t {
            match roots.iter().position(|r| *r == j) {
                Some(idx) => {
                    roots.remove(idx);
                }
                None => return Err(Rejection::FallingFactorialNotDivisor),
            }
            j += 1;
        }
    }

    // Remaining roots u_1 >= u_2 >= ... give strictly increasing heights.
    let u = roots;
    let mut heights = Vec::with_capacity(u.len());
    for (i, ui) in u.iter().enumerate() {
        let h = -ui + &t + BigInt::from(i as u64 + 1);
        let h = h
            .to_u64()
            .expect("heights from a nonincreasing root sequence are positive");
        heights.push(h);
    }
    let board = FerrersBoard::from_parts(heights);

    if rook_polynomial_ferrers(&board) != *q {
        return Err(Rejection::VerificationMismatch);
    }
    Ok(InverseSolution { board, n, t, u })
}

/// The unique increasing Ferrers board rook-equivalent to `b`
/// (Foata-Schuetzenberger canonical form). Idempotent; fixes increasing
/// boards. Any rejection from the inverse solver here is a bug.
pub fn canonical_increasing(b: &FerrersBoard) -> Result<FerrersBoard, CanonError> {
    let q = rook_polynomial_ferrers(b);
    match solve_inverse(&q) {
        Ok(sol) => Ok(sol.board),
        Err(rej) => Err(CanonError::Internal(rej)),
    }
}

/// True iff the two boards have the same rook polynomial.
pub fn rook_equivalent(a: &FerrersBoard, b: &FerrersBoard) -> bool {
    rook_polynomial_ferrers(a) == rook_polynomial_ferrers(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{enumerate_ferrers, enumerate_increasing_ferrers};
    use crate::rookpoly::factorial_rook_polynomial;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn fb(heights: &[i64]) -> FerrersBoard {
        FerrersBoard::from_heights(heights).unwrap()
    }

    #[test]
    fn solve_figure_polynomial() {
        let sol = solve_inverse(&p(&[1, 4, 2])).unwrap();
        assert_eq!(sol.board, fb(&[1, 3]));
        assert_eq!(sol.n, 2);
        assert_eq!(sol.t, BigInt::from(-1));
        assert_eq!(sol.u, vec![BigInt::from(-1), BigInt::from(-2)]);
    }

    #[test]
    fn solve_rejections() {
        assert_eq!(solve_inverse(&p(&[1, 4, 1])), Err(Rejection::NonIntegerRoots));
        assert_eq!(
            solve_inverse(&p(&[1, 4, 5, 1])),
            Err(Rejection::DegreeExceedsBound { degree: 3, bound: 2 })
        );
        assert!(matches!(
            solve_inverse(&p(&[2, 1])),
            Err(Rejection::NecessaryConditionFailed(_))
        ));
        assert!(matches!(
            solve_inverse(&Polynomial::zero()),
            Err(Rejection::NecessaryConditionFailed(_))
        ));
    }

    #[test]
    fn solve_trivial_boards() {
        let sol = solve_inverse(&Polynomial::one()).unwrap();
        assert_eq!(sol.board, FerrersBoard::empty());

        let sol = solve_inverse(&p(&[1, 1])).unwrap();
        assert_eq!(sol.board, fb(&[1]));
        assert_eq!(sol.n, 1);
        assert_eq!(sol.t, BigInt::from(-1));
        assert_eq!(sol.u, vec![BigInt::from(-1)]);
    }

    #[test]
    fn solve_worked_example_board() {
        let q = rook_polynomial_ferrers(&fb(&[1, 1, 3, 4, 7]));
        let sol = solve_inverse(&q).unwrap();
        assert_eq!(sol.board, fb(&[2, 3, 4, 7]));
        assert_eq!(rook_polynomial_ferrers(&sol.board), q);
    }

    #[test]
    fn canonicalization_examples() {
        assert_eq!(
            canonical_increasing(&fb(&[1, 1, 3, 4, 7])).unwrap(),
            fb(&[2, 3, 4, 7])
        );
        assert_eq!(
            canonical_increasing(&fb(&[2, 3, 4, 7])).unwrap(),
            fb(&[2, 3, 4, 7])
        );
        // (1,1) has rook polynomial 1 + 2x, shared with the single column (2).
        assert_eq!(rook_polynomial_ferrers(&fb(&[1, 1])), p(&[1, 2]));
        assert_eq!(canonical_increasing(&fb(&[1, 1])).unwrap(), fb(&[2]));
        assert_eq!(canonical_increasing(&fb(&[])).unwrap(), fb(&[]));
    }

    #[test]
    fn rook_equivalence_examples() {
        assert!(rook_equivalent(&fb(&[1, 1, 3, 4, 7]), &fb(&[2, 3, 4, 7])));
        assert!(!rook_equivalent(&fb(&[1]), &fb(&[1, 1])));
        for b in enumerate_ferrers(6) {
            assert!(rook_equivalent(&b, &b));
        }
    }

    #[test]
    fn equivalence_matches_factorial_form_and_canonical() {
        let boards: Vec<FerrersBoard> = (0..=8u64).flat_map(enumerate_ferrers).collect();
        for a in &boards {
            for b in &boards {
                let eq = rook_equivalent(a, b);
                assert_eq!(eq, rook_equivalent(b, a));
                let n = a.column_count().max(b.column_count());
                assert_eq!(
                    eq,
                    factorial_rook_polynomial(a, n).unwrap()
                        == factorial_rook_polynomial(b, n).unwrap(),
                    "a={a:?} b={b:?}"
                );
                assert_eq!(
                    eq,
                    canonical_increasing(a).unwrap() == canonical_increasing(b).unwrap()
                );
            }
        }
    }

    #[test]
    fn roundtrip_small() {
        for cells in 0..=12u64 {
            for b in enumerate_increasing_ferrers(cells) {
                let q = rook_polynomial_ferrers(&b);
                let sol = solve_inverse(&q).unwrap();
                assert_eq!(sol.board, b);
                // t-consistency: c = n - (t+1).
                let c = BigInt::from(sol.n as u64) - (&sol.t + 1);
                assert_eq!(c, BigInt::from(sol.board.column_count() as u64));
            }
        }
    }

    #[test]
    fn divisibility_checked_by_actual_division() {
        // Cross-check the root-multiset divisibility test against polynomial
        // division by (x)_{t+1}.
        for cells in 1..=10u64 {
            for b in enumerate_increasing_ferrers(cells) {
                let q = rook_polynomial_ferrers(&b);
                let sol = solve_inverse(&q).unwrap();
                let fp = q.to_factorial_form(sol.n).unwrap();
                let mut rem = fp;
                let mut j = BigInt::zero();
                while j <= sol.t {
                    let (quot, r) = rem.divide_by_linear(&j).unwrap();
                    assert!(r.is_zero(), "b={b:?} j={j}");
                    rem = quot;
                    j += 1;
                }
                // What is left is exactly prod (x - u_i).
                let mut expect = Polynomial::one();
                for u in &sol.u {
                    expect = &expect * &Polynomial::linear_from_root(u);
                }
                assert_eq!(rem, expect);
            }
        }
    }

    #[test]
    fn rejection_reason_and_stage_names() {
        assert_eq!(Rejection::NonIntegerRoots.reason(), "NonIntegerRoots");
        assert_eq!(Rejection::NonIntegerRoots.stage(), "integer_roots");
        assert_eq!(
            Rejection::DegreeExceedsBound { degree: 3, bound: 2 }.stage(),
            "degree_bound"
        );
        assert_eq!(
            Rejection::FallingFactorialNotDivisor.reason(),
            "FallingFactorialNotDivisor"
        );
    }
}
