//! Build a tower over `Q[x]` whose generic datum matches a target: diagonal
//! weight cells, plus random `x`-couplings that obstruct periods until the
//! target's deficits are realized. Construction is rejected and retried
//! until the computed datum matches.

use period_core::datum::DeRhamDatum;
use period_core::family::{family_datum, DifTower};
use period_core::linalg::matrix::Matrix;
use period_core::rings::poly::UniPoly;
use period_core::rings::rational::rat_int;
use period_core::rings::{RingDescriptor, RingElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::rng_from_seed;

const RETRY_BOUND: usize = 200;

#[derive(Debug, Clone)]
pub struct GenerateError(pub String);

impl std::fmt::Display for GenerateError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for GenerateError {}

/// Deterministic per seed. `rank` defaults to the weight count; extra rank
/// is padded with generic (non-integer-weight) diagonal entries.
pub fn generate_random_family(
    target: &DeRhamDatum,
    seed: u64,
    rank: Option<usize>,
) -> Result<DifTower, GenerateError> {
    let ring = RingDescriptor::poly_ring("x");
    let sd = target.dimensions().0 as usize;
    let rank = rank.unwrap_or(sd.max(1));
    if sd > rank {
        return Err(GenerateError(format!(
            "datum needs {} weights but the requested rank is {}",
            sd, rank
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut last = String::new();
    for _ in 0..RETRY_BOUND {
        let tower = build_candidate(&ring, target, rank, sd, &mut rng);
        match family_datum(&tower) {
            Ok(d) if &d == target => return Ok(tower),
            Ok(d) => last = d.to_string(),
            Err(e) => last = e.to_string(),
        }
    }
    Err(GenerateError(format!(
        "could not realize the datum at rank {} within {} attempts (last datum: {})",
        rank, RETRY_BOUND, last
    )))
}

fn build_candidate(
    ring: &RingDescriptor,
    target: &DeRhamDatum,
    rank: usize,
    sd: usize,
    rng: &mut ChaCha8Rng,
) -> DifTower {
    // weight cells in increasing weight order; remember each cell's offset
    let mut diag: Vec<RingElement> = Vec::with_capacity(rank);
    let mut cell_of_weight: Vec<(i64, usize, usize)> = Vec::new(); // (w, offset, size)
    for (&w, &m) in target.omega() {
        cell_of_weight.push((w, diag.len(), m as usize));
        for _ in 0..m {
            diag.push(RingElement::from_i64(ring, -w));
        }
    }
    // padding with generic diagonal entries x + c (no integer weight)
    for pad in 0..rank - sd {
        let c = rat_int(pad as i64 + 1);
        let e = RingElement::new(
            ring.clone(),
            &UniPoly::variable() + &UniPoly::constant(c),
        )
        .unwrap();
        diag.push(e);
    }
    let a0 = Matrix::diag(ring, &diag);

    let full = target.full_on_omega();
    let is_full = target == &full;
    let max_gap = cell_of_weight
        .iter()
        .map(|&(w, _, _)| w)
        .max()
        .and_then(|hi| cell_of_weight.iter().map(|&(w, _, _)| w).min().map(|lo| hi - lo))
        .unwrap_or(0)
        .max(1) as usize;
    let depth = if is_full { 1 } else { max_gap + 1 };
    let mut blocks = vec![a0];
    for s in 1..depth {
        let mut b = Matrix::zero(ring, rank, rank);
        if !is_full {
            // couple weight w into weight w + s where the target shows a
            // deficit across that span
            for &(w, off_w, sz_w) in &cell_of_weight {
                let wp = w + s as i64;
                if let Some(&(_, off_p, sz_p)) =
                    cell_of_weight.iter().find(|&&(v, _, _)| v == wp)
                {
                    let deficit = full.delta_at(w, wp + 1) - target.delta_at(w, wp + 1);
                    if deficit == 0 && !rng.gen_bool(0.15) {
                        continue;
                    }
                    for r in 0..sz_p {
                        for c in 0..sz_w {
                            let coeff = rng.gen_range(-2i64..=2);
                            if coeff != 0 && rng.gen_bool(0.8) {
                                let e = RingElement::new(
                                    ring.clone(),
                                    UniPoly::monomial(rat_int(coeff), 1),
                                )
                                .unwrap();
                                b.set(off_p + r, off_w + c, e);
                            }
                        }
                    }
                }
            }
        }
        blocks.push(b);
    }
    DifTower::new(ring.clone(), rank, blocks).expect("square blocks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use period_core::datum::{full_datum, Delta, Omega};

    fn datum(o: &[(i64, u32)], d: &[((i64, i64), u32)]) -> DeRhamDatum {
        let omega: Omega = o.iter().copied().collect();
        let delta: Delta = d.iter().copied().collect();
        DeRhamDatum::validate(&omega, &delta).unwrap()
    }

    #[test]
    fn zero_datum_gives_weightless_tower() {
        let t = generate_random_family(&DeRhamDatum::zero(), 1, Some(2)).unwrap();
        assert!(family_datum(&t).unwrap().is_zero());
    }

    #[test]
    fn full_targets_are_diagonal() {
        let target = full_datum(&[(0i64, 2u32)].into_iter().collect());
        let t = generate_random_family(&target, 1, None).unwrap();
        assert_eq!(family_datum(&t).unwrap(), target);
        assert_eq!(t.depth(), 1);
    }

    #[test]
    fn running_example_datum_is_realized() {
        let target = datum(
            &[(0, 1), (1, 1)],
            &[((0, 1), 1), ((1, 2), 1), ((0, 2), 1)],
        );
        let t = generate_random_family(&target, 1, None).unwrap();
        assert_eq!(family_datum(&t).unwrap(), target);
    }

    #[test]
    fn insufficient_rank_is_an_error() {
        let target = full_datum(&[(0i64, 3u32)].into_iter().collect());
        assert!(generate_random_family(&target, 1, Some(2)).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let target = datum(
            &[(0, 1), (1, 1)],
            &[((0, 1), 1), ((1, 2), 1), ((0, 2), 1)],
        );
        let a = generate_random_family(&target, 9, None).unwrap();
        let b = generate_random_family(&target, 9, None).unwrap();
        assert_eq!(a, b);
    }
}
