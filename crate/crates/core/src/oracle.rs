//! Exact-arithmetic verification for type A: Jordan matrices, centralizer
//! dimensions and the rank-of-powers closure criterion.
//!
//! Everything here runs over an exact integer scalar; no floating point.
//! The module is independent of the partition formulas it is used to check:
//! ranks come from fraction-free Gaussian elimination on explicit matrices.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Scalar type usable for exact elimination: an integer-like ring with
/// exact division by divisors that are known to divide.
///
/// Blanket-implemented for every signed num-traits integer, in particular
/// `i64`, `i128` and `num_bigint::BigInt`. The crate root exports
/// [`crate::OracleInt`] as the default choice.
pub trait ExactScalar: Clone + PartialEq + Zero + One + Signed {}

impl<T> ExactScalar for T where T: Clone + PartialEq + Zero + One + Signed {}

/// A dense matrix with exact entries, row-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: ExactScalar> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &ExactMatrix<T>) -> ExactMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ExactMatrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    /// `self^k` by binary exponentiation; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> ExactMatrix<T> {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut result = ExactMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Rank by fraction-free (Bareiss) Gaussian elimination. Exact: every
    /// division is by the previous pivot, which divides evenly.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut prev_pivot = T::one();
        let mut rank = 0;
        let mut pivot_col = 0;
        while rank < rows && pivot_col < cols {
            let pivot_row = (rank..rows).find(|&r| !m[(r, pivot_col)].is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => {
                    pivot_col += 1;
                    continue;
                }
            };
            m.swap_rows(rank, pivot_row);
            let pivot = m[(rank, pivot_col)].clone();
            for r in rank + 1..rows {
                for c in pivot_col + 1..cols {
                    let num = pivot.clone() * m[(r, c)].clone()
                        - m[(r, pivot_col)].clone() * m[(rank, c)].clone();
                    m[(r, c)] = num / prev_pivot.clone();
                }
                m[(r, pivot_col)] = T::zero();
            }
            prev_pivot = pivot;
            rank += 1;
            pivot_col += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for ExactMatrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for ExactMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.entries[r * self.cols + c]
    }
}

/// The nilpotent block-diagonal matrix with one Jordan block of size
/// `lambda_i` per part, ones on the superdiagonal of each block.
pub fn jordan_matrix<T: ExactScalar>(lambda: &Partition) -> Result<ExactMatrix<T>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n = lambda.weight();
    let mut m = ExactMatrix::zeros(n, n);
    let mut offset = 0;
    for &part in lambda.parts() {
        for i in 0..part - 1 {
            m[(offset + i, offset + i + 1)] = T::one();
        }
        offset += part;
    }
    Ok(m)
}

/// Dimension of the centralizer `{X : XM = MX}` of a square matrix,
/// computed as `n^2 - rank(L)` where `L` is the linear operator
/// `X -> XM - MX` on n-by-n matrices.
pub fn centralizer_dim<T: ExactScalar>(m: &ExactMatrix<T>) -> usize {
    assert!(m.is_square(), "centralizer of a square matrix");
    let n = m.rows();
    // Row (i,j) of L is the coefficient list of (XM - MX)_{ij}; the column
    // for unknown X_{a,b} holds delta_{a,i} M_{b,j} - delta_{b,j} M_{i,a}.
    let mut op = ExactMatrix::<T>::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for b in 0..n {
                let col = i * n + b;
                op[(row, col)] = op[(row, col)].clone() + m[(b, j)].clone();
            }
            for a in 0..n {
                let col = a * n + j;
                op[(row, col)] = op[(row, col)].clone() - m[(i, a)].clone();
            }
        }
    }
    n * n - op.rank()
}

/// Ranks of the powers `M^1, ..., M^max_power` of the Jordan matrix of
/// `lambda`, computed by repeated multiplication.
pub fn jordan_rank_profile<T: ExactScalar>(
    lambda: &Partition,
    max_power: usize,
) -> Result<Vec<usize>> {
    let m = jordan_matrix::<T>(lambda)?;
    let mut profile = Vec::with_capacity(max_power);
    let mut power = m.clone();
    for _ in 0..max_power {
        profile.push(power.rank());
        power = power.mul(&m);
    }
    Ok(profile)
}

/// The rank-of-powers closure criterion: the orbit of `mu` lies in the
/// closure of the orbit of `lambda` iff `rank(J(mu)^k) <= rank(J(lambda)^k)`
/// for every `k` up to the common weight.
pub fn closure_leq_via_ranks<T: ExactScalar>(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            left: mu.weight(),
            right: lambda.weight(),
        });
    }
    let n = mu.weight();
    if n == 0 {
        return Ok(true);
    }
    let lower = jordan_rank_profile::<T>(mu, n)?;
    let upper = jordan_rank_profile::<T>(lambda, n)?;
    Ok(lower.iter().zip(&upper).all(|(l, u)| l <= u))
}
