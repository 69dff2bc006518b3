//! Matrices with entries in a supported ring.

use crate::error::{Error, Result};
use crate::linalg::qmat::QMat;
use crate::rings::poly::UniPoly;
use crate::rings::rational::Rational;
use crate::rings::{RingDescriptor, RingElement, RingMap};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl Matrix {
    pub fn new(
        ring: RingDescriptor,
        rows: usize,
        cols: usize,
        data: Vec<RingElement>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        for e in &data {
            if e.ring() != &ring {
                return Err(Error::RingMismatch {
                    expected: ring.to_string(),
                    got: e.ring().to_string(),
                });
            }
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        ring: &RingDescriptor,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> RingElement,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(ring: &RingDescriptor, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(ring, rows, cols, |_, _| RingElement::zero(ring))
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        Matrix::from_fn(ring, n, n, |r, c| {
            if r == c {
                RingElement::one(ring)
            } else {
                RingElement::zero(ring)
            }
        })
    }

    pub fn diag(ring: &RingDescriptor, entries: &[RingElement]) -> Self {
        Matrix::from_fn(ring, entries.len(), entries.len(), |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                RingElement::zero(ring)
            }
        })
    }

    /// Test helper style constructor: integer entries, row-major.
    pub fn from_i64(ring: &RingDescriptor, rows: usize, cols: usize, e: &[i64]) -> Self {
        assert_eq!(e.len(), rows * cols);
        Matrix::from_fn(ring, rows, cols, |r, c| {
            RingElement::from_i64(ring, e[r * cols + c])
        })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
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

    pub fn get(&self, r: usize, c: usize) -> &RingElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RingElement) {
        assert_eq!(v.ring(), &self.ring);
        self.data[r * self.cols + c] = v;
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            self.get(r, c).add(other.get(r, c))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            self.get(r, c).sub(other.get(r, c))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |r, c| self.get(r, c).neg())
    }

    pub fn scale(&self, s: &RingElement) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            self.get(r, c).mul(s)
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_eq!(self.ring, other.ring);
        Matrix::from_fn(&self.ring, self.rows, other.cols, |r, c| {
            let mut acc = RingElement::zero(&self.ring);
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, c)));
            }
            acc
        })
    }

    pub fn mul_col(&self, v: &[RingElement]) -> Vec<RingElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = RingElement::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Shift by an integer multiple of the identity: `self + j I`.
    pub fn add_scalar_identity(&self, j: i64) -> Matrix {
        assert!(self.is_square());
        let mut out = self.clone();
        for r in 0..self.rows {
            out.set(
                r,
                r,
                out.get(r, r).add(&RingElement::from_i64(&self.ring, j)),
            );
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<RingElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<RingElement>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Apply a ring map entrywise; the result lives over the target ring.
    pub fn apply_map(&self, m: &RingMap) -> Result<Matrix> {
        if m.source() != &self.ring {
            return Err(Error::IllTypedMap(format!(
                "matrix over {} fed to a map from {}",
                self.ring,
                m.source()
            )));
        }
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(m.apply(e)?);
        }
        Matrix::new(m.target().clone(), self.rows, self.cols, data)
    }

    /// View the matrix as a `Q`-linear map by expanding each entry of a
    /// finite-dimensional ring into its multiplication matrix. Only `Q` and
    /// quotient rings flatten.
    pub fn flatten_q(&self) -> Result<QMat> {
        match &self.ring {
            RingDescriptor::Rationals => Ok(QMat::from_fn(self.rows, self.cols, |r, c| {
                self.get(r, c).as_rational().unwrap()
            })),
            RingDescriptor::Quotient { modulus, .. } => {
                let d = modulus.degree().unwrap();
                let mut out = QMat::zero(self.rows * d, self.cols * d);
                for r in 0..self.rows {
                    for c in 0..self.cols {
                        let a = self.get(r, c);
                        if a.is_zero() {
                            continue;
                        }
                        // column j of the block: x^j * a mod f
                        let mut cur = a.value().clone();
                        for j in 0..d {
                            if j > 0 {
                                cur = (&cur * &UniPoly::variable())
                                    .div_rem(modulus)
                                    .expect("nonzero modulus")
                                    .1;
                            }
                            for i in 0..d {
                                let v = cur.coeff(i);
                                if !v.is_zero() {
                                    out.set(r * d + i, c * d + j, v);
                                }
                            }
                        }
                    }
                }
                Ok(out)
            }
            RingDescriptor::PolyRing { .. } => Err(Error::UnsupportedRing(
                "Q[x] is not finite dimensional over Q".to_string(),
            )),
        }
    }

    /// Flatten a column vector over `Q` or a quotient ring into `Q^{n d}`.
    pub fn flatten_column(ring: &RingDescriptor, v: &[RingElement]) -> Result<Vec<Rational>> {
        match ring {
            RingDescriptor::Rationals => {
                Ok(v.iter().map(|e| e.as_rational().unwrap()).collect())
            }
            RingDescriptor::Quotient { modulus, .. } => {
                let d = modulus.degree().unwrap();
                let mut out = Vec::with_capacity(v.len() * d);
                for e in v {
                    for i in 0..d {
                        out.push(e.value().coeff(i));
                    }
                }
                Ok(out)
            }
            RingDescriptor::PolyRing { .. } => Err(Error::UnsupportedRing(
                "Q[x] is not finite dimensional over Q".to_string(),
            )),
        }
    }

    /// `Q`-dimensions of kernel and cokernel of the flattened map.
    pub fn q_kernel_cokernel_dims(&self) -> Result<(usize, usize)> {
        let flat = self.flatten_q()?;
        let rank = flat.rank();
        Ok((flat.cols - rank, flat.rows - rank))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::poly::UniPoly;
    use crate::rings::rational::rat_int;

    #[test]
    fn arithmetic_over_q() {
        let q = RingDescriptor::Rationals;
        let a = Matrix::from_i64(&q, 2, 2, &[1, 2, 3, 4]);
        let b = Matrix::from_i64(&q, 2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b), Matrix::from_i64(&q, 2, 2, &[2, 1, 4, 3]));
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn flatten_quotient_multiplication() {
        // multiplication by x on Q[x]/(x^2 - 2) has matrix [[0,2],[1,0]]
        let ring =
            RingDescriptor::quotient("x", UniPoly::from_i64_coeffs(&[-2, 0, 1])).unwrap();
        let x = RingElement::variable(&ring).unwrap();
        let m = Matrix::new(ring.clone(), 1, 1, vec![x]).unwrap();
        let flat = m.flatten_q().unwrap();
        assert_eq!(flat.get(0, 0), &rat_int(0));
        assert_eq!(flat.get(0, 1), &rat_int(2));
        assert_eq!(flat.get(1, 0), &rat_int(1));
        assert_eq!(flat.get(1, 1), &rat_int(0));
    }

    #[test]
    fn q_dims_of_nilpotent() {
        let q = RingDescriptor::Rationals;
        let a = Matrix::from_i64(&q, 2, 2, &[0, 1, 0, 0]);
        assert_eq!(a.q_kernel_cokernel_dims().unwrap(), (1, 1));
    }

    #[test]
    fn apply_map_specializes_entries() {
        let qx = RingDescriptor::poly_ring("x");
        let x = RingElement::variable(&qx).unwrap();
        let m = Matrix::new(qx.clone(), 1, 2, vec![x.clone(), RingElement::one(&qx)]).unwrap();
        let ev = RingMap::evaluate_at(qx, rat_int(7)).unwrap();
        let m7 = m.apply_map(&ev).unwrap();
        assert_eq!(m7.get(0, 0).as_rational().unwrap(), rat_int(7));
    }
}
