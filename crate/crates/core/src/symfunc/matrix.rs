//! Dense exact matrices and partition-indexed transition matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Row-major dense matrix over an exact domain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<C>,
    /// Prototype used to build constants, so that empty matrices still know
    /// their domain.
    zero: C,
}

impl<C: Scalar> Matrix<C> {
    pub fn from_fn(rows: usize, cols: usize, zero: C, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries, zero: zero.zero_like() }
    }

    pub fn from_rows(rows: Vec<Vec<C>>, zero: C) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect(), zero: zero.zero_like() })
    }

    pub fn identity(n: usize, zero: C) -> Self {
        let one = zero.one_like();
        Self::from_fn(n, n, zero.clone(), |i, j| if i == j { one.clone() } else { zero.zero_like() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: C) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn zero_elem(&self) -> C {
        self.zero.clone()
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<D: Scalar>(&self, zero: D, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix<C>) -> Result<Matrix<C>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, self.zero.clone(), |i, j| {
            let mut acc = self.zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero_elem() {
                    acc = acc + a.clone() * rhs.get(k, j).clone();
                }
            }
            acc
        }))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == e.one_like()
                    } else {
                        e.is_zero_elem()
                    }
                })
            })
    }

    /// Unit diagonal and zeros strictly below it.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                *self.get(i, i) == self.zero.one_like() && (0..i).all(|j| self.get(i, j).is_zero_elem())
            })
    }

    /// Unit diagonal and zeros strictly above it.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact in an integral domain; row swaps flip the sign.
    pub fn det(&self) -> Result<C> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("det of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let one = self.zero.one_like();
        if n == 0 {
            return Ok(one);
        }
        let mut a = self.to_rows();
        let mut prev = one;
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero_elem() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(self.zero.clone()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let cross = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = cross
                        .exact_div(&prev)
                        .ok_or_else(|| Error::Dimension("inexact Bareiss division".into()))?;
                }
                a[i][k] = self.zero.clone();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Inverse by Gauss–Jordan elimination; needs a field (every nonzero
    /// element divides exactly).
    pub fn inverse(&self) -> Result<Matrix<C>> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::identity(n, self.zero.clone()).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[i][col].is_zero_elem()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = a[col][j].exact_div(&p).ok_or(Error::Singular)?;
                inv[col][j] = inv[col][j].exact_div(&p).ok_or(Error::Singular)?;
            }
            for i in (0..n).filter(|&i| i != col) {
                let factor = a[i][col].clone();
                if factor.is_zero_elem() {
                    continue;
                }
                for j in 0..n {
                    a[i][j] = a[i][j].clone() - factor.clone() * a[col][j].clone();
                    inv[i][j] = inv[i][j].clone() - factor.clone() * inv[col][j].clone();
                }
            }
        }
        Matrix::from_rows(inv, self.zero.clone())
    }

    /// Inverse of an upper unitriangular matrix by back-substitution, without
    /// any division, so it works over rings such as `ℚ[t]`.
    pub fn upper_unitriangular_inverse(&self) -> Result<Matrix<C>> {
        if !self.is_upper_unitriangular() {
            return Err(Error::Dimension("matrix is not upper unitriangular".into()));
        }
        let n = self.rows;
        let mut inv = Matrix::identity(n, self.zero.clone());
        // solve column by column: inv[i][j] = -Σ_{i<k<=j} a[i][k] inv[k][j]
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = self.zero.clone();
                for k in i + 1..=j {
                    let a = self.get(i, k);
                    if !a.is_zero_elem() {
                        acc = acc + a.clone() * inv.get(k, j).clone();
                    }
                }
                inv.set(i, j, -acc);
            }
        }
        Ok(inv)
    }
}

/// A matrix whose rows and columns are labelled by partitions in canonical order.
/// Row `λ` holds the coefficients expressing the `λ`-th element of the source
/// family in the target family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionMatrix<C> {
    pub row_index: Vec<Partition>,
    pub col_index: Vec<Partition>,
    pub matrix: Matrix<C>,
}

impl<C: Scalar> TransitionMatrix<C> {
    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&C> {
        let i = self.row_index.iter().position(|p| p == row)?;
        let j = self.col_index.iter().position(|p| p == col)?;
        Some(self.matrix.get(i, j))
    }

    pub fn det(&self) -> Result<C> {
        self.matrix.det()
    }
}
