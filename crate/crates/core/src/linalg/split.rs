//! Splitting a module under an annihilated operator.
//!
//! Given a square `phi` with `P(phi) = 0` for `P = Q * prod (T - r_i)^{k_i}`
//! and the unit hypothesis on `prod Q(r_i) * prod_{i<j} (r_i - r_j)`, the
//! module decomposes into `ker Q(phi)` and the generalized eigenblocks
//! `ker (phi - r_i)^{k_i}`. The projectors are polynomials in `phi`: invert
//! each cofactor `P_i` as a power series around `r_i` and multiply back.

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::ringpoly::RingPoly;
use crate::linalg::smith::smith_normal_form;
use crate::rings::poly::UniPoly;
use crate::rings::{RingDescriptor, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockLabel {
    /// `ker Q(phi)`, the part untouched by the listed roots.
    Cofactor,
    /// `ker (phi - r_i)^{k_i}` for the i-th listed root.
    Root(usize),
}

#[derive(Debug, Clone)]
pub struct SplitBlock {
    pub label: BlockLabel,
    pub projector: Matrix,
    pub basis: Vec<Vec<RingElement>>,
}

#[derive(Debug, Clone)]
pub struct SplitResult {
    pub blocks: Vec<SplitBlock>,
}

impl SplitResult {
    pub fn cofactor_block(&self) -> &SplitBlock {
        self.blocks
            .iter()
            .find(|b| b.label == BlockLabel::Cofactor)
            .expect("cofactor block always present")
    }

    pub fn root_block(&self, i: usize) -> &SplitBlock {
        self.blocks
            .iter()
            .find(|b| b.label == BlockLabel::Root(i))
            .expect("root index in range")
    }
}

/// Split the module under `phi` along the roots `r_i` (with multiplicities
/// `k_i`) and the cofactor `q`.
pub fn split_by_operator(
    phi: &Matrix,
    roots: &[(RingElement, u32)],
    q: &UniPoly,
) -> Result<SplitResult> {
    if !phi.is_square() {
        return Err(Error::NotSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    let ring = phi.ring().clone();
    for (r, k) in roots {
        if r.ring() != &ring {
            return Err(Error::RingMismatch {
                expected: ring.to_string(),
                got: r.ring().to_string(),
            });
        }
        if *k == 0 {
            return Err(Error::InvalidArgument(
                "root multiplicities must be positive".to_string(),
            ));
        }
    }
    let q_lift = RingPoly::from_unipoly(&ring, q);
    if q_lift.is_zero() {
        return Err(Error::InvalidArgument("cofactor Q must be nonzero".into()));
    }

    // unit hypothesis: prod Q(r_i) * prod_{i<j} (r_i - r_j)
    let mut unit_witness = RingElement::one(&ring);
    for (r, _) in roots {
        unit_witness = unit_witness.mul(&q_lift.eval(r));
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            unit_witness = unit_witness.mul(&roots[i].0.sub(&roots[j].0));
        }
    }
    if !unit_witness.is_unit() {
        return Err(Error::UnitHypothesis(unit_witness.to_string()));
    }

    // P = Q * prod (T - r_i)^{k_i} must annihilate phi.
    let mut p = q_lift.clone();
    for (r, k) in roots {
        let lin = RingPoly::new(ring.clone(), vec![r.neg(), RingElement::one(&ring)]);
        p = p.mul(&lin.pow(*k));
    }
    if !p.eval_matrix(phi).is_zero() {
        return Err(Error::NotAnnihilated);
    }

    let n = phi.rows();
    let identity = Matrix::identity(&ring, n);
    let mut blocks = Vec::with_capacity(roots.len() + 1);
    let mut projector_sum = Matrix::zero(&ring, n, n);

    for (i, (r_i, k_i)) in roots.iter().enumerate() {
        // cofactor of this root inside P
        let mut p_i = q_lift.clone();
        for (j, (r_j, k_j)) in roots.iter().enumerate() {
            if j == i {
                continue;
            }
            let lin = RingPoly::new(ring.clone(), vec![r_j.neg(), RingElement::one(&ring)]);
            p_i = p_i.mul(&lin.pow(*k_j));
        }
        // expand P_i around r_i and invert as a power series mod (T - r_i)^k
        let expanded = p_i.shift(r_i);
        let k = *k_i as usize;
        let c0_inv = expanded.coeff(0).inverse()?;
        let mut inv_coeffs: Vec<RingElement> = Vec::with_capacity(k);
        inv_coeffs.push(c0_inv.clone());
        for m in 1..k {
            let mut acc = RingElement::zero(&ring);
            for l in 1..=m {
                acc = acc.add(&expanded.coeff(l).mul(&inv_coeffs[m - l]));
            }
            inv_coeffs.push(acc.mul(&c0_inv).neg());
        }
        let series = RingPoly::new(ring.clone(), inv_coeffs);
        let g_i = series.shift(&r_i.neg());
        let e_i = g_i.mul(&p_i);
        let projector = e_i.eval_matrix(phi);
        projector_sum = projector_sum.add(&projector);
        blocks.push(SplitBlock {
            label: BlockLabel::Root(i),
            basis: column_span_basis(&projector)?,
            projector,
        });
    }

    let cofactor_projector = identity.sub(&projector_sum);
    blocks.insert(
        0,
        SplitBlock {
            label: BlockLabel::Cofactor,
            basis: column_span_basis(&cofactor_projector)?,
            projector: cofactor_projector,
        },
    );
    Ok(SplitResult { blocks })
}

/// Generators of the column span of a matrix. Over a PID this is a free
/// image basis; over a quotient ring it is a `Q`-basis of the column span,
/// returned as module columns.
pub fn column_span_basis(a: &Matrix) -> Result<Vec<Vec<RingElement>>> {
    match a.ring() {
        RingDescriptor::Quotient { modulus, .. } => {
            let d = modulus.degree().unwrap();
            let flat = a.flatten_q()?;
            let pivot_cols = flat.column_basis_indices();
            let x = RingElement::variable(a.ring())?;
            let mut out = Vec::with_capacity(pivot_cols.len());
            for idx in pivot_cols {
                let c = idx / d;
                let j = idx % d;
                let xj = x.pow(j as u32);
                out.push(
                    a.column(c)
                        .into_iter()
                        .map(|e| e.mul(&xj))
                        .collect::<Vec<_>>(),
                );
            }
            Ok(out)
        }
        _ => {
            let snf = smith_normal_form(a)?;
            let rank = snf.rank();
            let av = a.mul(&snf.v);
            Ok((0..rank).map(|j| av.column(j)).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qmat::same_span;
    use crate::rings::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn check_projector_identities(phi: &Matrix, split: &SplitResult) {
        let ring = phi.ring();
        let n = phi.rows();
        let mut sum = Matrix::zero(ring, n, n);
        for (bi, b) in split.blocks.iter().enumerate() {
            assert_eq!(
                b.projector.mul(&b.projector),
                b.projector,
                "projector {} not idempotent",
                bi
            );
            assert_eq!(
                b.projector.mul(phi),
                phi.mul(&b.projector),
                "projector {} does not commute with phi",
                bi
            );
            for (bj, other) in split.blocks.iter().enumerate() {
                if bi != bj {
                    assert!(
                        b.projector.mul(&other.projector).is_zero(),
                        "projectors {} and {} not orthogonal",
                        bi,
                        bj
                    );
                }
            }
            sum = sum.add(&b.projector);
        }
        assert_eq!(sum, Matrix::identity(ring, n), "projectors do not sum to I");
    }

    /// Flattened Q-span equality of a block basis with ker M.
    fn assert_basis_is_kernel(ring: &RingDescriptor, basis: &[Vec<RingElement>], m: &Matrix) {
        let flat = m.flatten_q().unwrap();
        let kernel = flat.kernel_basis();
        let flattened: Vec<Vec<_>> = basis
            .iter()
            .map(|col| Matrix::flatten_column(ring, col).unwrap())
            .collect();
        assert!(
            same_span(flat.cols, &flattened, &kernel),
            "block basis does not span the expected kernel"
        );
    }

    #[test]
    fn diagonal_with_cofactor() {
        // phi = diag(0,0,2); roots [(0,2)]; Q = T-2
        let phi = Matrix::from_i64(&q(), 3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 2]);
        let roots = vec![(RingElement::from_i64(&q(), 0), 2u32)];
        let split =
            split_by_operator(&phi, &roots, &UniPoly::from_i64_coeffs(&[-2, 1])).unwrap();
        check_projector_identities(&phi, &split);
        // root block = span{e1, e2} = ker phi^2
        assert_basis_is_kernel(&q(), &split.root_block(0).basis, &phi.pow(2));
        // cofactor block = ker (phi - 2)
        let shifted = phi.add_scalar_identity(-2);
        assert_basis_is_kernel(&q(), &split.cofactor_block().basis, &shifted);
        assert_eq!(split.root_block(0).basis.len(), 2);
        assert_eq!(split.cofactor_block().basis.len(), 1);
    }

    #[test]
    fn zero_operator_everything_in_root_block() {
        let phi = Matrix::zero(&q(), 3, 3);
        let roots = vec![(RingElement::from_i64(&q(), 0), 1u32)];
        let split = split_by_operator(&phi, &roots, &UniPoly::one()).unwrap();
        check_projector_identities(&phi, &split);
        assert_eq!(split.root_block(0).basis.len(), 3);
        assert!(split.cofactor_block().basis.is_empty());
    }

    #[test]
    fn non_semisimple_root_block() {
        // phi = [[0,1],[0,0]], phi^2 = 0: the whole module is the root block
        let phi = Matrix::from_i64(&q(), 2, 2, &[0, 1, 0, 0]);
        let roots = vec![(RingElement::from_i64(&q(), 0), 2u32)];
        let split = split_by_operator(&phi, &roots, &UniPoly::one()).unwrap();
        check_projector_identities(&phi, &split);
        assert_eq!(split.root_block(0).basis.len(), 2);
        assert!(split.cofactor_block().basis.is_empty());
    }

    #[test]
    fn two_roots_over_quotient_ring() {
        // over R = Q[y]/(y^2): phi = diag(y, 1+y) with roots y and 1+y;
        // their difference is the unit 1, so the splitting applies.
        let ring = RingDescriptor::quotient("y", UniPoly::from_i64_coeffs(&[0, 0, 1])).unwrap();
        let yv = RingElement::variable(&ring).unwrap();
        let one_plus_y = RingElement::one(&ring).add(&yv);
        let phi = Matrix::diag(&ring, &[yv.clone(), one_plus_y.clone()]);
        let roots = vec![(yv.clone(), 1u32), (one_plus_y.clone(), 1u32)];
        let split = split_by_operator(&phi, &roots, &UniPoly::one()).unwrap();
        check_projector_identities(&phi, &split);
        // each root block is free of rank 1 over R: 2 Q-dimensions each
        assert_eq!(split.root_block(0).basis.len(), 2);
        assert_eq!(split.root_block(1).basis.len(), 2);
        // and equals the kernel of (phi - r_0)
        let m0 = phi.sub(&Matrix::diag(&ring, &[yv.clone(), yv.clone()]));
        assert_basis_is_kernel(&ring, &split.root_block(0).basis, &m0);
    }

    #[test]
    fn unit_hypothesis_rejected() {
        // repeated root: difference 0 is not a unit
        let phi = Matrix::zero(&q(), 2, 2);
        let roots = vec![
            (RingElement::from_i64(&q(), 0), 1u32),
            (RingElement::from_i64(&q(), 0), 1u32),
        ];
        assert!(matches!(
            split_by_operator(&phi, &roots, &UniPoly::one()),
            Err(Error::UnitHypothesis(_))
        ));
    }

    #[test]
    fn annihilation_required() {
        let phi = Matrix::from_i64(&q(), 2, 2, &[1, 0, 0, 2]);
        let roots = vec![(RingElement::from_i64(&q(), 0), 1u32)];
        assert!(matches!(
            split_by_operator(&phi, &roots, &UniPoly::one()),
            Err(Error::NotAnnihilated)
        ));
    }
}
