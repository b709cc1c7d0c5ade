//! Exact integer polynomial arithmetic in the monomial basis.
//!
//! Everything here works over arbitrary-precision integers: ring operations,
//! falling factorials, conversion to and from the factorial basis
//! `(x)_n, (x)_{n-1}, ...`, synthetic division, and complete integer root
//! extraction for monic polynomials.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolynomialError {
    #[error("degree {degree} exceeds padding length {n}")]
    DegreeExceedsN { degree: usize, n: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial does not split over the integers")]
    NotSplitting,
    #[error("internal error: {0}")]
    Internal(String),
}

/// Dense integer polynomial, coefficients in ascending degree order.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is the empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x - root` for an integer root.
    pub fn linear_from_root(root: &BigInt) -> Self {
        Polynomial::from_coeffs(vec![-root.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation at an exact integer point.
    pub fn evaluate(&self, point: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }

    /// The falling factorial `(x)_i = x(x-1)...(x-i+1)`, expanded; `(x)_0 = 1`.
    pub fn falling_factorial(i: usize) -> Self {
        let mut p = Polynomial::one();
        for j in 0..i {
            p = &p * &Polynomial::from_coeffs(vec![BigInt::from(-(j as i64)), BigInt::one()]);
        }
        p
    }

    /// The n-factorial form `q_n(x) = sum_k q_k (x)_{n-k}` of `self`, expanded
    /// in the monomial basis.
    pub fn to_factorial_form(&self, n: usize) -> Result<Polynomial, PolynomialError> {
        if let Some(m) = self.degree() {
            if m > n {
                return Err(PolynomialError::DegreeExceedsN { degree: m, n });
            }
        }
        let mut acc = Polynomial::zero();
        for (k, qk) in self.coeffs.iter().enumerate() {
            let term = Polynomial::falling_factorial(n - k).scale(qk);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Inverse of [`to_factorial_form`]: the unique integers `r_0..r_n` with
    /// `self = sum_k r_k (x)_{n-k}`, found by peeling leading coefficients.
    ///
    /// The factorial basis change is unimodular over the integers, so the
    /// expansion always exists for an integer polynomial of degree <= n.
    pub fn from_factorial_basis(&self, n: usize) -> Result<Vec<BigInt>, PolynomialError> {
        if let Some(m) = self.degree() {
            if m > n {
                return Err(PolynomialError::DegreeExceedsN { degree: m, n });
            }
        }
        let mut rem = self.clone();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let rk = rem.coeff(n - k);
            if !rk.is_zero() {
                rem = &rem - &Polynomial::falling_factorial(n - k).scale(&rk);
            }
            out.push(rk);
        }
        if !rem.is_zero() {
            return Err(PolynomialError::Internal(
                "factorial basis peeling left a nonzero remainder".into(),
            ));
        }
        Ok(out)
    }

    /// Synthetic division by `x - r`: returns `(quotient, remainder)` with
    /// `self = (x - r) * quotient + remainder` and `remainder = self(r)`.
    pub fn divide_by_linear(&self, r: &BigInt) -> Result<(Polynomial, BigInt), PolynomialError> {
        if self.is_zero() {
            return Err(PolynomialError::ZeroPolynomial);
        }
        let mut quotient = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let val = c + &carry * r;
            if k == 0 {
                return Ok((Polynomial::from_coeffs(quotient), val));
            }
            quotient[k - 1] = val.clone();
            carry = val;
        }
        unreachable!("nonzero polynomial has at least one coefficient")
    }

    /// Complete integer root extraction for a monic polynomial.
    ///
    /// Zero roots are stripped first; the remaining candidates are the signed
    /// divisors of the (now nonzero) trailing coefficient, each deflated to
    /// exhaustion. Succeeds iff the polynomial splits over the integers; the
    /// returned multiset is sorted nonincreasing.
    pub fn integer_roots(&self) -> Result<RootMultiset, PolynomialError> {
        if self.is_zero() {
            return Err(PolynomialError::ZeroPolynomial);
        }
        if !self.is_monic() {
            return Err(PolynomialError::NotMonic);
        }
        let mut roots: Vec<BigInt> = Vec::new();
        let zero_mult = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        roots.extend(std::iter::repeat(BigInt::zero()).take(zero_mult));
        let mut rem = Polynomial::from_coeffs(self.coeffs[zero_mult..].to_vec());

        if !rem.is_one() {
            // Any root of a deflated quotient divides its trailing coefficient,
            // which in turn divides the original trailing coefficient.
            let trailing = rem.coeff(0);
            for d in positive_divisors(&trailing) {
                for cand in [d.clone(), -d] {
                    while rem.degree() > Some(0) && rem.evaluate(&cand).is_zero() {
                        let (q, _) = rem.divide_by_linear(&cand)?;
                        rem = q;
                        roots.push(cand.clone());
                    }
                }
            }
            if !rem.is_one() {
                return Err(PolynomialError::NotSplitting);
            }
        }

        roots.sort();
        roots.reverse();
        Ok(RootMultiset {
            roots,
            leading_unit: BigInt::one(),
        })
    }

    fn scale(&self, factor: &BigInt) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

/// The full multiset of integer roots of a split monic polynomial, sorted
/// nonincreasing. `leading_unit` is the leading coefficient (always 1 here);
/// `leading_unit * prod (x - root)` reproduces the source polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMultiset {
    pub roots: Vec<BigInt>,
    pub leading_unit: BigInt,
}

impl RootMultiset {
    /// Expand `leading_unit * prod (x - root)` back into a polynomial.
    pub fn reconstruct(&self) -> Polynomial {
        let mut p = Polynomial::one().scale(&self.leading_unit);
        for r in &self.roots {
            p = &p * &Polynomial::linear_from_root(r);
        }
        p
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{k}")?,
            }
        }
        Ok(())
    }
}
