//! Dense exact linear algebra over `Q`: rank, kernels, column spans.
//!
//! This is the flattened workhorse behind quotient-ring computations, where
//! a module over `Q[x]/(f)` is treated as a `Q`-vector space.

use crate::rings::rational::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMat { rows, cols, data }
    }

    /// Build from column vectors; all must share a length.
    pub fn from_cols(rows: usize, cols: &[Vec<Rational>]) -> Self {
        QMat::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Append the columns of `other` on the right.
    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows);
        QMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pr = None;
            for r in row..self.rows {
                if !self.get(r, col).is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != row {
                for c in 0..self.cols {
                    let a = self.get(pr, c).clone();
                    let b = self.get(row, c).clone();
                    self.set(pr, c, b);
                    self.set(row, c, a);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the null space, as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_row: std::collections::HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_row.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::from_integer(1.into());
            for (&c, &r) in &pivot_row {
                v[c] = -m.get(r, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Indices of a column basis of the column span, preferring earlier
    /// columns.
    pub fn column_basis_indices(&self) -> Vec<usize> {
        self.clone().rref()
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        QMat::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                if !self.get(r, k).is_zero() && !other.get(k, c).is_zero() {
                    acc += self.get(r, k) * other.get(k, c);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !v[k].is_zero() {
                        acc += self.get(r, k) * &v[k];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Do two sets of columns span the same subspace of `Q^rows`?
pub fn same_span(rows: usize, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ma = QMat::from_cols(rows, a);
    let mb = QMat::from_cols(rows, b);
    let ra = ma.rank();
    let rb = mb.rank();
    ra == rb && ma.hstack(&mb).rank() == ra
}

/// Is every column of `b` in the span of the columns of `a`?
pub fn contains_span(rows: usize, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ma = QMat::from_cols(rows, a);
    let mb = QMat::from_cols(rows, b);
    ma.hstack(&mb).rank() == ma.rank()
}
