//! Failure of kernel formation to commute with base change, measured by an
//! annihilator exponent. Cokernels always commute (tensoring is right
//! exact), so their defect is zero.

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::qmat::{contains_span, QMat};
use crate::linalg::smith::{cokernel_summary, kernel_basis};
use crate::rings::rational::Rational;
use crate::rings::{RingDescriptor, RingElement, RingMap, RingMapKind};
use num_traits::Zero;

pub const DEFAULT_DEFECT_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    /// Least `e >= 0` such that `map(f)^e` kills the comparison defect.
    Finite(usize),
    /// No exponent up to the configured bound works.
    Infinite,
}

impl Defect {
    pub fn is_finite(&self) -> bool {
        matches!(self, Defect::Finite(_))
    }
}

impl std::fmt::Display for Defect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Defect::Finite(e) => write!(f, "{}", e),
            Defect::Infinite => write!(f, "infinity"),
        }
    }
}

/// `(r0, r1)`: annihilator exponents of `map(f)` on the kernel and cokernel
/// comparison maps for `A` along `m`. `r1` is always 0.
pub fn base_change_defect(
    a: &Matrix,
    m: &RingMap,
    f: &RingElement,
    bound: usize,
) -> Result<(Defect, Defect)> {
    if a.ring() != m.source() || f.ring() != m.source() {
        return Err(Error::IllTypedMap(format!(
            "matrix over {} and f over {} must both live over the map source {}",
            a.ring(),
            f.ring(),
            m.source()
        )));
    }
    // Inclusions of Q into anything (and identities) are flat: kernels
    // commute on the nose.
    if matches!(m.kind(), RingMapKind::Inclusion) {
        return Ok((Defect::Finite(0), Defect::Finite(0)));
    }
    if !a.ring().is_pid() {
        return Err(Error::UnsupportedRing(format!(
            "kernel comparison needs a PID source, got {}",
            a.ring()
        )));
    }
    let target = m.target();
    let d = target
        .qdim()
        .ok_or_else(|| Error::UnsupportedRing(format!("target {} not Artinian", target)))?;

    let kernel = kernel_basis(a)?;
    let t = kernel.len();
    let a_t = a.apply_map(m)?;
    let flat_a = a_t.flatten_q()?;
    let big_kernel = flat_a.kernel_basis();

    // The comparison map mu: target^t -> ker(A (x) target), e_i -> map(K_i),
    // as a flattened Q-linear map.
    let mapped_cols: Vec<Vec<RingElement>> = {
        let mut cols = Vec::with_capacity(t);
        for col in &kernel {
            let mut out = Vec::with_capacity(col.len());
            for e in col {
                out.push(m.apply(e)?);
            }
            cols.push(out);
        }
        cols
    };
    let mu = Matrix::from_fn(target, a.cols(), t, |r, c| mapped_cols[c][r].clone());
    let flat_mu = mu.flatten_q()?;

    let f_t = m.apply(f)?;
    // multiplication by map(f) on target^k, flattened
    let mult_by_f = |k: usize| -> Result<QMat> {
        let diag = Matrix::from_fn(target, k, k, |r, c| {
            if r == c {
                f_t.clone()
            } else {
                RingElement::zero(target)
            }
        });
        diag.flatten_q()
    };

    // exponent killing ker(mu) in target^t
    let e_ker = {
        let basis = flat_mu.kernel_basis();
        nilpotency_exponent(&mult_by_f(t)?, basis, t * d, bound)
    };
    // exponent pushing the big kernel into the image of mu
    let e_coker = {
        let image: Vec<Vec<Rational>> = (0..flat_mu.cols).map(|c| flat_mu.col(c)).collect();
        let dim = a.cols() * d;
        let mult = mult_by_f(a.cols())?;
        let mut vecs = big_kernel;
        let mut e = 0usize;
        loop {
            if contains_span(dim, &image, &vecs) {
                break Some(e);
            }
            if e >= bound {
                break None;
            }
            vecs = vecs.iter().map(|v| mult.mul_vec(v)).collect();
            e += 1;
        }
    };

    let r0 = match (e_ker, e_coker) {
        (Some(a), Some(b)) => Defect::Finite(a.max(b)),
        _ => Defect::Infinite,
    };
    Ok((r0, Defect::Finite(0)))
}

/// Least `e` with `C^e v = 0` for all given vectors, up to `bound`.
fn nilpotency_exponent(
    c: &QMat,
    mut vecs: Vec<Vec<Rational>>,
    _dim: usize,
    bound: usize,
) -> Option<usize> {
    let mut e = 0usize;
    loop {
        if vecs.iter().all(|v| v.iter().all(|x| x.is_zero())) {
            return Some(e);
        }
        if e >= bound {
            return None;
        }
        vecs = vecs.iter().map(|v| c.mul_vec(v)).collect();
        e += 1;
    }
}

/// Dimensions over `Q` of the cokernel after base change, computed two ways:
/// directly from the specialized matrix, and from the invariant-factor
/// summary of the cokernel over the source. They agree because tensoring is
/// right exact.
pub fn cokernel_base_change_dims(a: &Matrix, m: &RingMap) -> Result<(usize, usize)> {
    let direct = {
        let a_t = a.apply_map(m)?;
        let flat = a_t.flatten_q()?;
        flat.rows - flat.rank()
    };
    let summary = cokernel_summary(a)?;
    let via_summary = match (m.kind(), m.target()) {
        (RingMapKind::EvaluateAt(at), _) => summary.qdim_at_point(at),
        (_, RingDescriptor::Quotient { modulus, .. }) => summary.qdim_mod(modulus)?,
        (_, RingDescriptor::Rationals) => summary.free_rank,
        _ => {
            return Err(Error::UnsupportedRing(format!(
                "target {} not Artinian",
                m.target()
            )))
        }
    };
    Ok((direct, via_summary))
}
