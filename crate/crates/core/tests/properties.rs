//! Property tests for the algebraic invariants: ring axioms under maps,
//! CRT idempotent identities, Smith form contracts against an independent
//! elimination oracle, operator splittings, datum axioms under every
//! operation, and tower cohomology laws.

use num_traits::{One, Zero};
use period_core::datum::{enumerate_valid_data_on_grid, AssociatedKind, DeRhamDatum};
use period_core::family::{
    cohomology_dims, family_datum, pointwise_datum, weight_multiplicities, DifTower, Site,
};
use period_core::linalg::base_change::cokernel_base_change_dims;
use period_core::linalg::matrix::Matrix;
use period_core::linalg::smith::{
    bareiss_det, kernel_and_cokernel, smith_normal_form, KernelCokernel,
};
use period_core::linalg::split::split_by_operator;
use period_core::rings::crt_idempotents;
use period_core::rings::poly::{poly_gcd_bezout, poly_shift, UniPoly};
use period_core::rings::rational::{rat, rat_int, Rational};
use period_core::rings::{RingDescriptor, RingElement, RingMap};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..7, 1i64..4).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..6, 0..=max_len).prop_map(|c| UniPoly::from_i64_coeffs(&c))
}

fn qx() -> RingDescriptor {
    RingDescriptor::poly_ring("x")
}

fn qx_matrix(n: usize, deg: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(
        prop::collection::vec(-4i64..5, 1..=deg + 1),
        n * n,
    )
    .prop_map(move |entries| {
        Matrix::from_fn(&qx(), n, n, |r, c| {
            RingElement::new(qx(), UniPoly::from_i64_coeffs(&entries[r * n + c])).unwrap()
        })
    })
}

/// Independent rank oracle: fraction-free (Bareiss-style) elimination on a
/// rational matrix, no Smith machinery involved.
fn elimination_rank(rows: usize, cols: usize, entries: &[Rational]) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| (0..cols).map(|c| entries[r * cols + c].clone()).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[row][col];
                for c in 0..cols {
                    let t = &factor * &a[row][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

proptest! {
    #[test]
    fn shift_roundtrip(p in small_poly(6), c in small_rational()) {
        let back = poly_shift(&poly_shift(&p, &c), &(-c.clone()));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gcd_bezout_postconditions(a in small_poly(5), b in small_poly(5)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, u, v) = poly_gcd_bezout(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        let combo = &(&u * &a) + &(&v * &b);
        prop_assert_eq!(combo, g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// CRT idempotents on random coprime factor sets up to total degree 12.
    #[test]
    fn crt_idempotent_identities(
        roots in prop::collection::btree_set(-5i64..6, 1..4),
        exps in prop::collection::vec(1u32..3, 3),
        quad in prop::option::of(1i64..5),
    ) {
        let mut factors: Vec<UniPoly> = roots
            .iter()
            .enumerate()
            .map(|(i, &a)| UniPoly::from_i64_coeffs(&[-a, 1]).pow(exps[i.min(2)]))
            .collect();
        if let Some(c) = quad {
            factors.push(UniPoly::from_i64_coeffs(&[c, 0, 1]));
        }
        let total: usize = factors.iter().map(|f| f.degree().unwrap()).sum();
        prop_assume!(total <= 12);
        let es = crt_idempotents("T", &factors).unwrap();
        let ring = es[0].ring().clone();
        let mut sum = RingElement::zero(&ring);
        for (i, e) in es.iter().enumerate() {
            prop_assert_eq!(&e.mul(e), e);
            for (j, f) in es.iter().enumerate() {
                if i != j {
                    prop_assert!(e.mul(f).is_zero());
                }
            }
            // e_i = 1 mod factor_i, 0 mod factor_j
            let rem_self = e.value().div_rem(&factors[i]).unwrap().1;
            prop_assert!(rem_self.is_one());
            for (j, fj) in factors.iter().enumerate() {
                if i != j {
                    prop_assert!(e.value().div_rem(fj).unwrap().1.is_zero());
                }
            }
            sum = sum.add(e);
        }
        prop_assert!(sum.is_one());
    }

    /// Ring maps are homomorphisms on random samples.
    #[test]
    fn ring_maps_respect_operations(
        a in small_poly(4),
        b in small_poly(4),
        at in -4i64..5,
        modulus in small_poly(3),
    ) {
        let ea = RingElement::new(qx(), a).unwrap();
        let eb = RingElement::new(qx(), b).unwrap();
        let mut maps = vec![RingMap::evaluate_at(qx(), rat_int(at)).unwrap()];
        if modulus.degree().unwrap_or(0) >= 1 {
            maps.push(RingMap::project_to_quotient(qx(), modulus).unwrap());
        }
        for m in maps {
            let sum = m.apply(&ea.add(&eb)).unwrap();
            let prod = m.apply(&ea.mul(&eb)).unwrap();
            prop_assert_eq!(sum, m.apply(&ea).unwrap().add(&m.apply(&eb).unwrap()));
            prop_assert_eq!(prod, m.apply(&ea).unwrap().mul(&m.apply(&eb).unwrap()));
        }
    }

    /// is_unit agrees with actual invertibility in quotient rings.
    #[test]
    fn units_are_invertible(v in small_poly(3), m in small_poly(4)) {
        prop_assume!(m.degree().unwrap_or(0) >= 1);
        let ring = RingDescriptor::quotient("x", m).unwrap();
        let e = RingElement::new(ring, v).unwrap();
        match e.inverse() {
            Ok(inv) => {
                prop_assert!(e.is_unit());
                prop_assert!(e.mul(&inv).is_one());
            }
            Err(_) => prop_assert!(!e.is_unit()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Smith decomposition contract over Q[x].
    #[test]
    fn smith_contract(a in (2usize..5).prop_flat_map(|n| qx_matrix(n, 2))) {
        let snf = smith_normal_form(&a).unwrap();
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s.clone());
        let to_polys = |m: &Matrix| -> Vec<Vec<UniPoly>> {
            (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).value().clone()).collect())
                .collect()
        };
        prop_assert_eq!(bareiss_det(&to_polys(&snf.u)).degree(), Some(0));
        prop_assert_eq!(bareiss_det(&to_polys(&snf.v)).degree(), Some(0));
        let ds = snf.divisors();
        for i in 0..ds.len() {
            prop_assert!(ds[i].is_zero() || ds[i].is_monic());
            if i + 1 < ds.len() && !ds[i + 1].is_zero() {
                prop_assert!(ds[i].divides(&ds[i + 1]));
            }
        }
        // square matrices: kernel rank equals cokernel rank generically
        let r = snf.rank();
        prop_assert_eq!(a.cols() - r, a.rows() - r);
    }

    /// kernel_and_cokernel over Q agrees with an elimination oracle.
    #[test]
    fn q_kernel_cokernel_matches_elimination(
        rows in 1usize..5,
        cols in 1usize..5,
        seed in prop::collection::vec(-9i64..10, 25),
    ) {
        let q = RingDescriptor::Rationals;
        let entries: Vec<Rational> = (0..rows * cols).map(|k| rat_int(seed[k])).collect();
        let a = Matrix::from_fn(&q, rows, cols, |r, c| {
            RingElement::from_rational(&q, entries[r * cols + c].clone())
        });
        let oracle_rank = elimination_rank(rows, cols, &entries);
        let KernelCokernel::Pid { kernel, cokernel } = kernel_and_cokernel(&a).unwrap() else {
            panic!("Q is a PID");
        };
        prop_assert_eq!(kernel.len(), cols - oracle_rank);
        prop_assert_eq!(cokernel.free_rank, rows - oracle_rank);
        prop_assert!(cokernel.torsion_divisors.is_empty());
        for v in &kernel {
            prop_assert!(a.mul_col(v).iter().all(|e| e.is_zero()));
        }
    }

    /// Splitting identities for random similarity transports of model
    /// operators over Q.
    #[test]
    fn split_identities_over_q(
        elementary in prop::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..6),
        k1 in 1u32..3,
    ) {
        let q = RingDescriptor::Rationals;
        // J = diag(0-block of nilpotency k1, 2, 5) conjugated by elementary
        // operations; P = (T)^k1 (T-2) annihilates... build 4x4
        let mut j = Matrix::zero(&q, 4, 4);
        if k1 == 2 {
            j.set(0, 1, RingElement::one(&q));
        }
        j.set(2, 2, RingElement::from_i64(&q, 2));
        j.set(3, 3, RingElement::from_i64(&q, 2));
        let mut g = Matrix::identity(&q, 4);
        let mut ginv = Matrix::identity(&q, 4);
        for (r, c, v) in elementary {
            if r == c {
                continue;
            }
            let mut e = Matrix::identity(&q, 4);
            e.set(r, c, RingElement::from_i64(&q, v));
            let mut einv = Matrix::identity(&q, 4);
            einv.set(r, c, RingElement::from_i64(&q, -v));
            g = g.mul(&e);
            ginv = einv.mul(&ginv);
        }
        let phi = g.mul(&j).mul(&ginv);
        let roots = vec![(RingElement::zero(&q), k1)];
        let split = split_by_operator(&phi, &roots, &UniPoly::from_i64_coeffs(&[-2, 1])).unwrap();
        let mut sum = Matrix::zero(&q, 4, 4);
        for b in &split.blocks {
            prop_assert_eq!(b.projector.mul(&b.projector), b.projector.clone());
            prop_assert_eq!(b.projector.mul(&phi), phi.mul(&b.projector));
            sum = sum.add(&b.projector);
        }
        prop_assert_eq!(sum, Matrix::identity(&q, 4));
        prop_assert_eq!(split.root_block(0).basis.len(), 2);
        prop_assert_eq!(split.cofactor_block().basis.len(), 2);
    }

    /// Cokernel formation commutes with every base change.
    #[test]
    fn cokernel_base_change_is_iso(
        a in (1usize..4).prop_flat_map(|n| qx_matrix(n, 2)),
        at in -3i64..4,
        e in 1u32..4,
    ) {
        let maps = vec![
            RingMap::evaluate_at(qx(), rat_int(at)).unwrap(),
            RingMap::project_to_quotient(
                qx(),
                UniPoly::from_i64_coeffs(&[-at, 1]).pow(e),
            )
            .unwrap(),
        ];
        for m in maps {
            let (direct, via_summary) = cokernel_base_change_dims(&a, &m).unwrap();
            prop_assert_eq!(direct, via_summary);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Tower laws on random rank-2 towers over Q[x] with linear entries.
    #[test]
    fn tower_laws(
        a0_entries in prop::collection::vec(-2i64..3, 4),
        a1_entries in prop::collection::vec((-1i64..2, -1i64..2), 4),
        sample in -3i64..4,
    ) {
        let r = qx();
        let a0 = Matrix::from_i64(&r, 2, 2, &a0_entries);
        let a1 = Matrix::from_fn(&r, 2, 2, |i, c| {
            let (con, lin) = a1_entries[i * 2 + c];
            RingElement::new(r.clone(), UniPoly::from_i64_coeffs(&[con, lin])).unwrap()
        });
        let tower = DifTower::new(r.clone(), 2, vec![a0, a1]).unwrap();

        // generic datum is valid and dominated by every pointwise datum
        let generic = family_datum(&tower).unwrap();
        let (sd, htd, drd) = generic.dimensions();
        prop_assert!(drd <= htd && htd <= sd);
        let m = RingMap::evaluate_at(r.clone(), rat_int(sample)).unwrap();
        let pointwise = pointwise_datum(&tower, &m).unwrap();
        prop_assert!(generic.less_equal(&pointwise));

        // h0 = h1 at the point and monotone in l
        let mut prev = None;
        for l in 1..=4i64 {
            let d = cohomology_dims(&tower, 0, l, Site::Map(&m)).unwrap();
            prop_assert_eq!(d.h0, d.h1);
            if let Some(p) = prev {
                prop_assert!(d.h0 >= p);
            }
            prev = Some(d.h0);
        }
    }

    /// The dual-twist Sen polynomial rule on random diagonal towers.
    #[test]
    fn dual_twist_rule(weights in prop::collection::vec(-3i64..4, 1..4), s in -3i64..4) {
        let q = RingDescriptor::Rationals;
        let entries: Vec<RingElement> = weights
            .iter()
            .map(|&w| RingElement::from_i64(&q, -w))
            .collect();
        let a0 = Matrix::diag(&q, &entries);
        let t = DifTower::new(q.clone(), weights.len(), vec![a0]).unwrap();
        let p = t.sen_polynomial();
        let expected = p
            .reflect()
            .shift(&RingElement::from_i64(&q, -s))
            .monic()
            .unwrap();
        prop_assert_eq!(t.dual_twist(s).sen_polynomial(), expected);
        // weights negate and shift
        let om = weight_multiplicities(&t.dual_twist(s).sen_polynomial()).unwrap();
        for &w in &weights {
            prop_assert!(om.get(&(-w - s)).copied().unwrap_or(0) >= 1);
        }
    }
}

/// Datum invariants over the full grid: every operation's output validates,
/// the dimension chain holds, associated data are idempotent and ordered,
/// twists preserve everything, min covers are minimal.
#[test]
fn datum_operations_preserve_validity_on_grid() {
    let all = enumerate_valid_data_on_grid(0, 2, 2, 2);
    assert!(all.len() > 50);
    for d in &all {
        let (sd, htd, drd) = d.dimensions();
        assert!(drd <= htd && htd <= sd);
        let ht = d.associated(AssociatedKind::HodgeTate);
        let sen = d.associated(AssociatedKind::Sen);
        assert_eq!(ht.associated(AssociatedKind::HodgeTate), ht);
        assert_eq!(sen.associated(AssociatedKind::Sen), sen);
        assert!(sen.less_equal(&ht));
        assert!(ht.less_equal(&d.full_on_omega()));
        assert!(sen.classify().sen);
        assert!(ht.classify().hodge_tate);
        let t = d.twist(2);
        assert_eq!(t.twist(-2), *d);
        assert_eq!(t.dimensions(), d.dimensions());
        assert_eq!(t.classify(), d.classify());
        let tr = d.truncate(0, 1);
        assert!(tr.less_equal(d));
        // validate round-trips the canonical parts
        let revalidated = DeRhamDatum::validate(d.omega(), d.delta()).unwrap();
        assert_eq!(&revalidated, d);
    }
}

#[test]
fn min_covers_small_grid_definition() {
    // direct poset check on a small grid: covers returned are exactly the
    // minimal strictly-greater data among the grid-enumerable ones with the
    // same bounded support
    let i = 0;
    let j = 1;
    let grid = enumerate_valid_data_on_grid(i, j, 3, 4);
    for d in enumerate_valid_data_on_grid(i, j, 2, 2) {
        let covers = d.min_covers(i, j).unwrap();
        let greater: Vec<&DeRhamDatum> = grid.iter().filter(|e| d.less_than(e)).collect();
        let minimal: Vec<&DeRhamDatum> = greater
            .iter()
            .filter(|e| !greater.iter().any(|f| f != *e && f.less_than(e)))
            .copied()
            .collect();
        let mut got = covers.clone();
        got.sort();
        let mut want: Vec<DeRhamDatum> = minimal.into_iter().cloned().collect();
        want.sort();
        assert_eq!(got, want, "covers of {}", d);
    }
}
