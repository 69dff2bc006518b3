//! Smith normal form over `Q` and `Q[x]`, and everything it drives: kernels,
//! cokernels, generic ranks, determinantal divisors and localized flatness.
//!
//! Pivoting rule: the nonzero entry of minimal degree, ties broken by
//! smallest (row, col). This makes the decomposition deterministic.

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::rings::poly::UniPoly;
use crate::rings::{RingDescriptor, RingElement};
use num_traits::Zero;

/// Unimodular factorization `U * A * V = S` with `S` diagonal, entries monic
/// or zero, each dividing the next.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub s: Matrix,
    pub v: Matrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `S`.
    pub fn divisors(&self) -> Vec<UniPoly> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.get(i, i).value().clone()).collect()
    }

    /// Number of nonzero diagonal entries = rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.divisors().iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonunit, nonzero divisors: the torsion part of the cokernel.
    pub fn torsion_divisors(&self) -> Vec<UniPoly> {
        self.divisors()
            .into_iter()
            .filter(|d| !d.is_zero() && d.degree().unwrap_or(0) >= 1)
            .collect()
    }
}

/// Free rank and invariant factors of a finitely generated module over a
/// PID.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSummary {
    pub free_rank: usize,
    pub torsion_divisors: Vec<UniPoly>,
}

impl ModuleSummary {
    /// Dimension over `Q` after base change along `x -> a`: each torsion
    /// factor `Q[x]/(d)` contributes 1 exactly when `d(a) = 0`.
    pub fn qdim_at_point(&self, a: &crate::rings::rational::Rational) -> usize {
        self.free_rank
            + self
                .torsion_divisors
                .iter()
                .filter(|d| d.eval(a).is_zero())
                .count()
    }

    /// Dimension over `Q` after base change to `Q[x]/(f)`:
    /// `Q[x]/(d) (x) Q[x]/(f) = Q[x]/gcd(d, f)`.
    pub fn qdim_mod(&self, f: &UniPoly) -> Result<usize> {
        let e = f.degree().ok_or(Error::DivisionByZero)?;
        let mut dim = self.free_rank * e;
        for d in &self.torsion_divisors {
            dim += d.gcd(f)?.degree().unwrap_or(0);
        }
        Ok(dim)
    }
}

struct Snf {
    a: Vec<Vec<UniPoly>>,
    u: Vec<Vec<UniPoly>>,
    v: Vec<Vec<UniPoly>>,
    rows: usize,
    cols: usize,
}

impl Snf {
    fn identity(n: usize) -> Vec<Vec<UniPoly>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { UniPoly::one() } else { UniPoly::zero() })
                    .collect()
            })
            .collect()
    }

    fn new(a: Vec<Vec<UniPoly>>) -> Self {
        let rows = a.len();
        let cols = if rows == 0 { 0 } else { a[0].len() };
        Snf {
            a,
            u: Self::identity(rows),
            v: Self::identity(cols),
            rows,
            cols,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &UniPoly) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = &self.a[j][c] * q;
            self.a[i][c] = &self.a[i][c] - &t;
        }
        for c in 0..self.rows {
            let t = &self.u[j][c] * q;
            self.u[i][c] = &self.u[i][c] - &t;
        }
        self.normalize_row(i);
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &UniPoly) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = &self.a[r][j] * q;
            self.a[r][i] = &self.a[r][i] - &t;
        }
        for r in 0..self.cols {
            let t = &self.v[r][j] * q;
            self.v[r][i] = &self.v[r][i] - &t;
        }
        self.normalize_col(i);
    }

    /// Rational scalars are units: rescale so the row of `a` has integer
    /// coefficients with content 1. This keeps remainder sequences from
    /// blowing up.
    fn normalize_row(&mut self, i: usize) {
        if let Some(s) = content_scale(self.a[i].iter()) {
            self.scale_row(i, &s);
        }
    }

    fn normalize_col(&mut self, j: usize) {
        let col: Vec<UniPoly> = (0..self.rows).map(|r| self.a[r][j].clone()).collect();
        if let Some(s) = content_scale(col.iter()) {
            for r in 0..self.rows {
                self.a[r][j] = self.a[r][j].scale(&s);
            }
            for r in 0..self.cols {
                self.v[r][j] = self.v[r][j].scale(&s);
            }
        }
    }

    /// col_i += col_j
    fn col_add(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.a[r][i] = &self.a[r][i] + &self.a[r][j];
        }
        for r in 0..self.cols {
            self.v[r][i] = &self.v[r][i] + &self.v[r][j];
        }
    }

    fn scale_row(&mut self, i: usize, c: &crate::rings::rational::Rational) {
        for x in &mut self.a[i] {
            *x = x.scale(c);
        }
        for x in &mut self.u[i] {
            *x = x.scale(c);
        }
    }

    fn pivot_at(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if let Some(d) = self.a[i][j].degree() {
                    let better = match best {
                        None => true,
                        Some((bd, bi, bj)) => (d, i, j) < (bd, bi, bj),
                    };
                    if better {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn diagonalize(&mut self) {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.pivot_at(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[i][t].div_rem(&self.a[t][t]).expect("pivot nonzero");
                    self.row_sub(i, t, &q);
                    if !r.is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[t][j].div_rem(&self.a[t][t]).expect("pivot nonzero");
                    self.col_sub(j, t, &q);
                    if !r.is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    let col_clean = (t + 1..self.rows).all(|i| self.a[i][t].is_zero());
                    let row_clean = (t + 1..self.cols).all(|j| self.a[t][j].is_zero());
                    if col_clean && row_clean {
                        break;
                    }
                }
            }
        }
    }

    fn run(&mut self) {
        loop {
            self.diagonalize();
            let n = self.rows.min(self.cols);
            let mut fixed = true;
            for t in 0..n.saturating_sub(1) {
                let dt = self.a[t][t].clone();
                let dn = self.a[t + 1][t + 1].clone();
                if dt.is_zero() && !dn.is_zero() {
                    self.swap_rows(t, t + 1);
                    self.swap_cols(t, t + 1);
                    fixed = false;
                } else if !dt.is_zero() && !dn.is_zero() && !dt.divides(&dn) {
                    self.col_add(t, t + 1);
                    fixed = false;
                    break;
                }
            }
            if fixed {
                break;
            }
        }
        // monic normalization
        for t in 0..self.rows.min(self.cols) {
            if let Some(lc) = self.a[t][t].leading_coeff() {
                let inv = lc.recip();
                if !inv.is_zero() && !self.a[t][t].is_monic() {
                    self.scale_row(t, &inv);
                }
            }
        }
    }
}

fn matrix_to_polys(a: &Matrix) -> Result<Vec<Vec<UniPoly>>> {
    if !a.ring().is_pid() {
        return Err(Error::UnsupportedRing(format!(
            "Smith form needs Q or Q[x], got {}",
            a.ring()
        )));
    }
    Ok((0..a.rows())
        .map(|r| (0..a.cols()).map(|c| a.get(r, c).value().clone()).collect())
        .collect())
}

fn polys_to_matrix(ring: &RingDescriptor, rows: usize, cols: usize, p: &[Vec<UniPoly>]) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |r, c| {
        RingElement::new(ring.clone(), p[r][c].clone()).expect("constant entries over Q")
    })
}

/// Smith normal form of a matrix over `Q` or `Q[x]`.
pub fn smith_normal_form(a: &Matrix) -> Result<SmithDecomposition> {
    let polys = matrix_to_polys(a)?;
    let mut snf = Snf::new(polys);
    snf.run();
    let ring = a.ring().clone();
    let mut s = Matrix::zero(&ring, a.rows(), a.cols());
    for t in 0..a.rows().min(a.cols()) {
        s.set(
            t,
            t,
            RingElement::new(ring.clone(), snf.a[t][t].clone())?,
        );
    }
    Ok(SmithDecomposition {
        u: polys_to_matrix(&ring, a.rows(), a.rows(), &snf.u),
        s,
        v: polys_to_matrix(&ring, a.cols(), a.cols(), &snf.v),
    })
}

/// Rank over the fraction field of an integral ring.
pub fn generic_rank(a: &Matrix) -> Result<usize> {
    if !a.ring().is_integral() {
        return Err(Error::UnsupportedRing(format!(
            "generic rank needs an integral ring, got {}",
            a.ring()
        )));
    }
    Ok(smith_normal_form(a)?.rank())
}

/// Kernel and cokernel of a matrix viewed as a map of free modules.
#[derive(Debug, Clone)]
pub enum KernelCokernel {
    /// Over a PID: a free kernel basis (columns) and the cokernel summary.
    Pid {
        kernel: Vec<Vec<RingElement>>,
        cokernel: ModuleSummary,
    },
    /// Over a quotient ring: exact `Q`-dimensions of kernel and cokernel.
    Artinian { ker_dim: usize, coker_dim: usize },
}

pub fn kernel_and_cokernel(a: &Matrix) -> Result<KernelCokernel> {
    match a.ring() {
        RingDescriptor::Quotient { .. } => {
            let (ker_dim, coker_dim) = a.q_kernel_cokernel_dims()?;
            Ok(KernelCokernel::Artinian { ker_dim, coker_dim })
        }
        _ => {
            let snf = smith_normal_form(a)?;
            let r = snf.rank();
            let kernel = (r..a.cols()).map(|j| snf.v.column(j)).collect();
            Ok(KernelCokernel::Pid {
                kernel,
                cokernel: ModuleSummary {
                    free_rank: a.rows() - r,
                    torsion_divisors: snf.torsion_divisors(),
                },
            })
        }
    }
}

/// A free basis of `ker A` over a PID.
pub fn kernel_basis(a: &Matrix) -> Result<Vec<Vec<RingElement>>> {
    match kernel_and_cokernel(a)? {
        KernelCokernel::Pid { kernel, .. } => Ok(kernel),
        KernelCokernel::Artinian { .. } => unreachable!("PID path checked by caller"),
    }
}

/// Cokernel summary of a matrix over a PID.
pub fn cokernel_summary(a: &Matrix) -> Result<ModuleSummary> {
    match kernel_and_cokernel(a)? {
        KernelCokernel::Pid { cokernel, .. } => Ok(cokernel),
        KernelCokernel::Artinian { .. } => unreachable!("PID path checked by caller"),
    }
}

/// Product of the first `k` invariant factors: the gcd of all `k x k`
/// minors, zero when `k` exceeds the generic rank.
pub fn determinantal_divisor_product(a: &Matrix, k: usize) -> Result<UniPoly> {
    if k == 0 {
        return Ok(UniPoly::one());
    }
    let snf = smith_normal_form(a)?;
    let divisors = snf.divisors();
    if k > divisors.len() {
        return Ok(UniPoly::zero());
    }
    let mut prod = UniPoly::one();
    for d in divisors.iter().take(k) {
        if d.is_zero() {
            return Ok(UniPoly::zero());
        }
        prod = &prod * d;
    }
    Ok(prod)
}

/// Fraction-free determinant (Bareiss) of a square polynomial matrix.
pub fn bareiss_det(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut a: Vec<Vec<UniPoly>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = UniPoly::one();
    for t in 0..n - 1 {
        if a[t][t].is_zero() {
            let Some(p) = (t + 1..n).find(|&i| !a[i][t].is_zero()) else {
                return UniPoly::zero();
            };
            a.swap(t, p);
            sign = -sign;
        }
        for i in t + 1..n {
            for j in t + 1..n {
                let num = &(&a[t][t] * &a[i][j]) - &(&a[i][t] * &a[t][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss divisibility");
            }
        }
        for i in t + 1..n {
            a[i][t] = UniPoly::zero();
        }
        prev = a[t][t].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Monic gcd of all `k x k` minors; the slow reference route for the
/// determinantal divisor product.
pub fn minors_gcd(a: &Matrix, k: usize) -> Result<UniPoly> {
    if k == 0 {
        return Ok(UniPoly::one());
    }
    if k > a.rows() || k > a.cols() {
        return Ok(UniPoly::zero());
    }
    let polys = matrix_to_polys(a)?;
    let row_sets = index_subsets(a.rows(), k);
    let col_sets = index_subsets(a.cols(), k);
    let mut g = UniPoly::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<UniPoly>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| polys[r][c].clone()).collect())
                .collect();
            let det = bareiss_det(&sub);
            if det.is_zero() {
                continue;
            }
            g = if g.is_zero() { det } else { g.gcd(&det)? };
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    if g.is_zero() {
        Ok(UniPoly::zero())
    } else {
        Ok(g.monic())
    }
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// Outcome of localizing the cokernel away from the vanishing locus of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlatSummary {
    Flat { ker_rank: usize, coker_rank: usize },
    NotFlat { offending: Vec<UniPoly> },
}

/// Does inverting `f` make kernel and cokernel of `A` flat? True exactly
/// when every irreducible factor of every invariant factor divides `f`.
pub fn localized_flat_summary(a: &Matrix, f: &UniPoly) -> Result<FlatSummary> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot invert f = 0".to_string()));
    }
    if !matches!(a.ring(), RingDescriptor::PolyRing { .. }) {
        return Err(Error::UnsupportedRing(format!(
            "localization summary needs Q[x], got {}",
            a.ring()
        )));
    }
    let snf = smith_normal_form(a)?;
    let r = snf.rank();
    let mut offending = Vec::new();
    for d in snf.torsion_divisors() {
        let mut g = d.clone();
        loop {
            let h = g.gcd(f)?;
            if h.is_constant() {
                break;
            }
            g = g.exact_div(&h)?;
        }
        if !g.is_constant() {
            offending.push(g.monic());
        }
    }
    if offending.is_empty() {
        Ok(FlatSummary::Flat {
            ker_rank: a.cols() - r,
            coker_rank: a.rows() - r,
        })
    } else {
        offending.sort();
        offending.dedup();
        Ok(FlatSummary::NotFlat { offending })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qx() -> RingDescriptor {
        RingDescriptor::poly_ring("x")
    }

    fn q() -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn elem(ring: &RingDescriptor, coeffs: &[i64]) -> RingElement {
        RingElement::new(ring.clone(), UniPoly::from_i64_coeffs(coeffs)).unwrap()
    }

    /// [[x, 1], [0, x]] over Q[x]
    fn jordan_x() -> Matrix {
        let r = qx();
        Matrix::new(
            r.clone(),
            2,
            2,
            vec![
                elem(&r, &[0, 1]),
                elem(&r, &[1]),
                elem(&r, &[0]),
                elem(&r, &[0, 1]),
            ],
        )
        .unwrap()
    }

    fn check_decomposition(a: &Matrix, snf: &SmithDecomposition) {
        // U A V = S exactly
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s);
        // U, V unimodular
        let poly_of = |m: &Matrix| -> Vec<Vec<UniPoly>> {
            (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).value().clone()).collect())
                .collect()
        };
        let du = bareiss_det(&poly_of(&snf.u));
        let dv = bareiss_det(&poly_of(&snf.v));
        assert_eq!(du.degree(), Some(0), "det U = {} not a unit", du);
        assert_eq!(dv.degree(), Some(0), "det V = {} not a unit", dv);
        // divisibility chain, monic-or-zero
        let ds = snf.divisors();
        for i in 0..ds.len() {
            assert!(ds[i].is_zero() || ds[i].is_monic());
            if i + 1 < ds.len() && !ds[i + 1].is_zero() {
                assert!(ds[i].divides(&ds[i + 1]), "chain broken at {}", i);
            }
        }
        // off-diagonal zero
        for r in 0..snf.s.rows() {
            for c in 0..snf.s.cols() {
                if r != c {
                    assert!(snf.s.get(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_zero_matrix() {
        let a = Matrix::zero(&qx(), 2, 2);
        let snf = smith_normal_form(&a).unwrap();
        check_decomposition(&a, &snf);
        assert!(snf.s.is_zero());
    }

    #[test]
    fn snf_already_diagonal() {
        let r = qx();
        let a = Matrix::diag(&r, &[elem(&r, &[0, 1]), elem(&r, &[0, 0, 1])]);
        let snf = smith_normal_form(&a).unwrap();
        check_decomposition(&a, &snf);
        assert_eq!(
            snf.divisors(),
            vec![
                UniPoly::from_i64_coeffs(&[0, 1]),
                UniPoly::from_i64_coeffs(&[0, 0, 1])
            ]
        );
    }

    #[test]
    fn snf_jordan_block() {
        // [[x, 1], [0, x]] -> diag(1, x^2)
        let a = jordan_x();
        let snf = smith_normal_form(&a).unwrap();
        check_decomposition(&a, &snf);
        assert_eq!(
            snf.divisors(),
            vec![UniPoly::one(), UniPoly::from_i64_coeffs(&[0, 0, 1])]
        );
    }

    #[test]
    fn snf_needs_chain_fix() {
        // diag(x, x-1): invariant factors 1, x(x-1)
        let r = qx();
        let a = Matrix::diag(&r, &[elem(&r, &[0, 1]), elem(&r, &[-1, 1])]);
        let snf = smith_normal_form(&a).unwrap();
        check_decomposition(&a, &snf);
        let ds = snf.divisors();
        assert!(ds[0].is_one());
        assert_eq!(ds[1], UniPoly::from_i64_coeffs(&[0, -1, 1]));
    }

    #[test]
    fn kernel_cokernel_over_q() {
        let a = Matrix::from_i64(&q(), 2, 2, &[0, 1, 0, 0]);
        let KernelCokernel::Pid { kernel, cokernel } = kernel_and_cokernel(&a).unwrap() else {
            panic!("expected PID result")
        };
        assert_eq!(kernel.len(), 1);
        // kernel spanned by (1, 0)
        let v = &kernel[0];
        assert!(v[1].is_zero() && !v[0].is_zero());
        assert_eq!(cokernel.free_rank, 1);
        assert!(cokernel.torsion_divisors.is_empty());
    }

    #[test]
    fn kernel_cokernel_single_x() {
        let r = qx();
        let a = Matrix::new(r.clone(), 1, 1, vec![elem(&r, &[0, 1])]).unwrap();
        let KernelCokernel::Pid { kernel, cokernel } = kernel_and_cokernel(&a).unwrap() else {
            panic!("expected PID result")
        };
        assert!(kernel.is_empty());
        assert_eq!(cokernel.free_rank, 0);
        assert_eq!(cokernel.torsion_divisors, vec![UniPoly::from_i64_coeffs(&[0, 1])]);
    }

    #[test]
    fn kernel_cokernel_jordan() {
        let a = jordan_x();
        let KernelCokernel::Pid { kernel, cokernel } = kernel_and_cokernel(&a).unwrap() else {
            panic!("expected PID result")
        };
        assert!(kernel.is_empty());
        assert_eq!(
            cokernel.torsion_divisors,
            vec![UniPoly::from_i64_coeffs(&[0, 0, 1])]
        );
    }

    #[test]
    fn generic_ranks() {
        assert_eq!(generic_rank(&Matrix::identity(&q(), 3)).unwrap(), 3);
        let r = qx();
        let x = elem(&r, &[0, 1]);
        let prop = Matrix::new(r.clone(), 2, 2, vec![x.clone(), x.clone(), x.clone(), x.clone()])
            .unwrap();
        assert_eq!(generic_rank(&prop).unwrap(), 1);
        let sym = Matrix::new(
            r.clone(),
            2,
            2,
            vec![x.clone(), elem(&r, &[1]), elem(&r, &[1]), x],
        )
        .unwrap();
        assert_eq!(generic_rank(&sym).unwrap(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let r = qx();
        let a = Matrix::new(
            r.clone(),
            2,
            3,
            vec![
                elem(&r, &[0, 1]),
                elem(&r, &[1]),
                elem(&r, &[0]),
                elem(&r, &[0]),
                elem(&r, &[0, 1]),
                elem(&r, &[0, 1]),
            ],
        )
        .unwrap();
        let kernel = kernel_basis(&a).unwrap();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            assert!(a.mul_col(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn determinantal_divisors_match_minors() {
        let a = jordan_x();
        for k in 0..=2 {
            assert_eq!(
                determinantal_divisor_product(&a, k).unwrap(),
                minors_gcd(&a, k).unwrap(),
                "k = {}",
                k
            );
        }
    }

    #[test]
    fn flat_summaries() {
        let r = qx();
        // [[x]] with f = x: flat, ranks (0, 0)
        let a = Matrix::new(r.clone(), 1, 1, vec![elem(&r, &[0, 1])]).unwrap();
        assert_eq!(
            localized_flat_summary(&a, &UniPoly::from_i64_coeffs(&[0, 1])).unwrap(),
            FlatSummary::Flat {
                ker_rank: 0,
                coker_rank: 0
            }
        );
        // [[x, 1], [0, x]] with f = x: divisor x^2 supported at x
        assert_eq!(
            localized_flat_summary(&jordan_x(), &UniPoly::from_i64_coeffs(&[0, 1])).unwrap(),
            FlatSummary::Flat {
                ker_rank: 0,
                coker_rank: 0
            }
        );
        // [[x-1]] with f = x: not flat, offending x-1
        let b = Matrix::new(r.clone(), 1, 1, vec![elem(&r, &[-1, 1])]).unwrap();
        assert_eq!(
            localized_flat_summary(&b, &UniPoly::from_i64_coeffs(&[0, 1])).unwrap(),
            FlatSummary::NotFlat {
                offending: vec![UniPoly::from_i64_coeffs(&[-1, 1])]
            }
        );
    }

    #[test]
    fn bareiss_matches_smith_determinant() {
        let r = qx();
        let a = Matrix::new(
            r.clone(),
            2,
            2,
            vec![elem(&r, &[0, 1]), elem(&r, &[1]), elem(&r, &[1]), elem(&r, &[0, 1])],
        )
        .unwrap();
        let det = bareiss_det(&[
            vec![UniPoly::from_i64_coeffs(&[0, 1]), UniPoly::one()],
            vec![UniPoly::one(), UniPoly::from_i64_coeffs(&[0, 1])],
        ]);
        assert_eq!(det, UniPoly::from_i64_coeffs(&[-1, 0, 1]));
        let snf = smith_normal_form(&a).unwrap();
        let prod = snf
            .divisors()
            .iter()
            .fold(UniPoly::one(), |acc, d| &acc * d);
        assert_eq!(prod, det.monic());
    }

    #[test]
    fn smith_rejects_quotient_rings() {
        let ring = RingDescriptor::quotient("x", UniPoly::from_i64_coeffs(&[0, 0, 1])).unwrap();
        let a = Matrix::zero(&ring, 1, 1);
        assert!(smith_normal_form(&a).is_err());
    }
}
