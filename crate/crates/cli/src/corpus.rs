//! Seeded random generators for the verification suites. Everything flows
//! from a single 64-bit seed through ChaCha8; no ambient entropy.

use period_core::family::DifTower;
use period_core::linalg::matrix::Matrix;
use period_core::rings::poly::UniPoly;
use period_core::rings::rational::rat_int;
use period_core::rings::{RingDescriptor, RingElement};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_unipoly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    UniPoly::from_i64_coeffs(&coeffs)
}

/// A random element with polynomial value of degree at most `max_deg`.
pub fn rand_element(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    max_deg: usize,
    bound: i64,
) -> RingElement {
    match ring {
        RingDescriptor::Rationals => RingElement::from_i64(ring, rng.gen_range(-bound..=bound)),
        _ => RingElement::new(ring.clone(), rand_unipoly(rng, max_deg, bound))
            .expect("reduced on construction"),
    }
}

pub fn rand_matrix(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    rows: usize,
    cols: usize,
    max_deg: usize,
    bound: i64,
) -> Matrix {
    let entries: Vec<RingElement> = (0..rows * cols)
        .map(|_| rand_element(rng, ring, max_deg, bound))
        .collect();
    Matrix::new(ring.clone(), rows, cols, entries).expect("consistent dimensions")
}

/// A random tower over the given ring.
pub fn rand_tower(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    max_rank: usize,
    max_depth: usize,
    entry_deg: usize,
) -> DifTower {
    let rank = rng.gen_range(1..=max_rank);
    let depth = rng.gen_range(1..=max_depth);
    let blocks: Vec<Matrix> = (0..depth)
        .map(|_| rand_matrix(rng, ring, rank, rank, entry_deg, 2))
        .collect();
    DifTower::new(ring.clone(), rank, blocks).expect("square blocks")
}

/// A random tower over Q[x] whose Sen block has prescribed small integer
/// weights on the diagonal, with x-linear couplings below: the corpus shape
/// on which period dimensions actually jump.
pub fn rand_weighted_tower(rng: &mut ChaCha8Rng, max_rank: usize) -> DifTower {
    let ring = RingDescriptor::poly_ring("x");
    let rank = rng.gen_range(2..=max_rank.max(2));
    let weights: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..3)).collect();
    let a0 = Matrix::diag(
        &ring,
        &weights
            .iter()
            .map(|&w| RingElement::from_i64(&ring, -w))
            .collect::<Vec<_>>(),
    );
    let mut a1 = Matrix::zero(&ring, rank, rank);
    for r in 0..rank {
        for c in 0..rank {
            if r == c {
                continue;
            }
            if rng.gen_bool(0.4) {
                let coeff = rng.gen_range(-2i64..=2);
                if coeff != 0 {
                    let e = RingElement::new(
                        ring.clone(),
                        UniPoly::monomial(rat_int(coeff), 1),
                    )
                    .unwrap();
                    a1.set(r, c, e);
                }
            }
        }
    }
    DifTower::new(ring, rank, vec![a0, a1]).unwrap()
}

/// A local Artinian coefficient ring `Q[x]/((x - a)^e)`.
pub fn rand_artinian_ring(rng: &mut ChaCha8Rng, max_breadth: u32) -> RingDescriptor {
    let a = rng.gen_range(-3i64..=3);
    let e = rng.gen_range(1..=max_breadth);
    let modulus = UniPoly::from_i64_coeffs(&[-a, 1]).pow(e);
    RingDescriptor::quotient("x", modulus).unwrap()
}

/// An instance for the splitting lemma: an operator conjugate to a model
/// with prescribed root blocks and a cofactor block, plus the data needed
/// to split it. Returns `(phi, roots, q)`.
pub fn rand_split_instance(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    max_rank: usize,
) -> (Matrix, Vec<(RingElement, u32)>, UniPoly) {
    // distinct rational root values keep all differences units in any of
    // the supported rings
    let mut values: Vec<i64> = (-4..=4).collect();
    // Fisher-Yates with the seeded rng
    for i in (1..values.len()).rev() {
        let j = rng.gen_range(0..=i);
        values.swap(i, j);
    }
    let n_roots = rng.gen_range(1..=2usize);
    let mut used = 0usize;
    let mut roots: Vec<(RingElement, u32)> = Vec::new();
    let mut cells: Vec<Matrix> = Vec::new();
    for i in 0..n_roots {
        let k = rng.gen_range(1..=2u32);
        let size = rng.gen_range(k..=k + 1) as usize;
        if used + size > max_rank {
            break;
        }
        used += size;
        let r = values[i];
        // r on the diagonal, with nilpotent chains no longer than k:
        // Jordan blocks of size at most k tiling the cell
        let mut cell = Matrix::identity(ring, size).scale(&RingElement::from_i64(ring, r));
        if k >= 2 {
            let mut d = 0;
            while d + 1 < size {
                cell.set(d, d + 1, RingElement::one(ring));
                d += k as usize; // skip to the start of the next block
            }
        }
        roots.push((RingElement::from_i64(ring, r), k));
        cells.push(cell);
    }
    if roots.is_empty() {
        let r = values[0];
        roots.push((RingElement::from_i64(ring, r), 1));
        cells.push(Matrix::diag(ring, &[RingElement::from_i64(ring, r)]));
        used = 1;
    }
    // cofactor block: companion of Q = prod (T - c_j) over values disjoint
    // from the roots, so Q(r_i) is a nonzero rational, a unit everywhere
    let spare = max_rank - used;
    let q_deg = rng.gen_range(0..=spare.min(2));
    let mut q = UniPoly::one();
    for j in 0..q_deg {
        let c = values[n_roots + j];
        q = &q * &UniPoly::from_i64_coeffs(&[-c, 1]);
    }
    if q_deg > 0 {
        cells.push(companion(ring, &q));
    }
    let total: usize = cells.iter().map(|c| c.rows()).sum();
    let mut j = Matrix::zero(ring, total, total);
    let mut off = 0;
    for cell in &cells {
        j.set_block(off, off, cell);
        off += cell.rows();
    }
    // conjugate by elementary matrices to hide the block structure
    let mut phi = j;
    for _ in 0..rng.gen_range(2..6) {
        let r = rng.gen_range(0..total);
        let c = rng.gen_range(0..total);
        if r == c {
            continue;
        }
        let v = rand_element(rng, ring, 1, 1);
        let mut e = Matrix::identity(ring, total);
        e.set(r, c, v.clone());
        let mut einv = Matrix::identity(ring, total);
        einv.set(r, c, v.neg());
        phi = e.mul(&phi).mul(&einv);
    }
    (phi, roots, q)
}

fn companion(ring: &RingDescriptor, monic: &UniPoly) -> Matrix {
    let n = monic.degree().expect("nonzero");
    let mut m = Matrix::zero(ring, n, n);
    for r in 1..n {
        m.set(r, r - 1, RingElement::one(ring));
    }
    for r in 0..n {
        m.set(
            r,
            n - 1,
            RingElement::from_rational(ring, -monic.coeff(r)),
        );
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use period_core::linalg::ringpoly::{char_poly, RingPoly};

    #[test]
    fn determinism_per_seed() {
        let mut r1 = rng_from_seed(42);
        let mut r2 = rng_from_seed(42);
        let a = rand_tower(&mut r1, &RingDescriptor::poly_ring("x"), 3, 2, 1);
        let b = rand_tower(&mut r2, &RingDescriptor::poly_ring("x"), 3, 2, 1);
        assert_eq!(a, b);
    }

    #[test]
    fn companion_has_its_polynomial() {
        let q = RingDescriptor::Rationals;
        let p = UniPoly::from_i64_coeffs(&[-6, 11, -6, 1]);
        let c = companion(&q, &p);
        let cp = char_poly(&c).unwrap();
        assert_eq!(cp, RingPoly::from_unipoly(&q, &p));
    }

    #[test]
    fn split_instances_are_annihilated() {
        let mut rng = rng_from_seed(7);
        for _ in 0..10 {
            let (phi, roots, q) = rand_split_instance(&mut rng, &RingDescriptor::Rationals, 6);
            let ring = phi.ring().clone();
            let mut p = RingPoly::from_unipoly(&ring, &q);
            for (r, k) in &roots {
                let lin = RingPoly::new(
                    ring.clone(),
                    vec![r.neg(), RingElement::one(&ring)],
                );
                p = p.mul(&lin.pow(*k));
            }
            assert!(p.eval_matrix(&phi).is_zero());
        }
    }
}
