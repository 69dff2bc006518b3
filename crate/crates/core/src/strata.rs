//! Stratification of the affine line by period data.
//!
//! Loci are finite or cofinite unions of Galois orbits of points, an orbit
//! being a monic irreducible rational polynomial. The closed locus of a
//! datum `D` is where the pointwise datum dominates `D`; removing the loci
//! of the minimal covers of `D` leaves the locally closed stratum where the
//! truncated pointwise datum equals `D` exactly.

use crate::datum::DeRhamDatum;
use crate::error::{Error, Result};
use crate::family::{cohomology_dims, pointwise_datum, DifTower, Site};
use crate::linalg::smith::determinantal_divisor_product;
use crate::rings::factor::factor;
use crate::rings::poly::UniPoly;
use crate::rings::rational::{rat_int, Rational};
use crate::rings::{RingDescriptor, RingMap};
use num_traits::Zero;
use std::fmt;

/// A subset of the rational line closed under Galois conjugation: empty,
/// everything, finitely many orbits, or the complement of finitely many.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locus {
    Empty,
    Everything,
    Finite(Vec<UniPoly>),
    Cofinite(Vec<UniPoly>),
}

impl Locus {
    /// The vanishing locus of a polynomial: everything for 0, empty for a
    /// nonzero constant, otherwise the set of irreducible factors.
    pub fn vanishing(g: &UniPoly) -> Result<Locus> {
        if g.is_zero() {
            return Ok(Locus::Everything);
        }
        if g.is_constant() {
            return Ok(Locus::Empty);
        }
        let factors: Vec<UniPoly> = factor(g)?.into_iter().map(|(p, _)| p).collect();
        Ok(Locus::finite(factors))
    }

    pub fn finite(mut orbits: Vec<UniPoly>) -> Locus {
        orbits.sort();
        orbits.dedup();
        if orbits.is_empty() {
            Locus::Empty
        } else {
            Locus::Finite(orbits)
        }
    }

    pub fn cofinite(mut orbits: Vec<UniPoly>) -> Locus {
        orbits.sort();
        orbits.dedup();
        if orbits.is_empty() {
            Locus::Everything
        } else {
            Locus::Cofinite(orbits)
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Locus::Empty)
    }

    pub fn intersect(&self, other: &Locus) -> Locus {
        use Locus::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => Empty,
            (Everything, x) | (x, Everything) => x.clone(),
            (Finite(a), Finite(b)) => {
                Locus::finite(a.iter().filter(|p| b.contains(p)).cloned().collect())
            }
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Locus::finite(a.iter().filter(|p| !e.contains(p)).cloned().collect())
            }
            (Cofinite(a), Cofinite(b)) => {
                let mut u = a.clone();
                u.extend(b.iter().cloned());
                Locus::cofinite(u)
            }
        }
    }

    /// Does the locus contain the rational point `a`?
    pub fn contains_point(&self, a: &Rational) -> bool {
        match self {
            Locus::Empty => false,
            Locus::Everything => true,
            Locus::Finite(orbits) => orbits.iter().any(|p| p.eval(a).is_zero()),
            Locus::Cofinite(excluded) => excluded.iter().all(|p| !p.eval(a).is_zero()),
        }
    }

    /// Does the locus contain the whole orbit of the given irreducible?
    pub fn contains_orbit(&self, orbit: &UniPoly) -> bool {
        match self {
            Locus::Empty => false,
            Locus::Everything => true,
            Locus::Finite(orbits) => orbits.contains(orbit),
            Locus::Cofinite(excluded) => !excluded.contains(orbit),
        }
    }

    /// Set-theoretic containment.
    pub fn subset_of(&self, other: &Locus) -> bool {
        use Locus::*;
        match (self, other) {
            (Empty, _) => true,
            (_, Everything) => true,
            (Everything, _) => false,
            (Finite(a), _) => a.iter().all(|p| other.contains_orbit(p)),
            (Cofinite(_), Finite(_)) | (Cofinite(_), Empty) => false,
            (Cofinite(a), Cofinite(b)) => b.iter().all(|p| a.contains(p)),
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Empty => write!(f, "empty"),
            Locus::Everything => write!(f, "everything"),
            Locus::Finite(orbits) => {
                let parts: Vec<String> = orbits.iter().map(|p| p.to_string()).collect();
                write!(f, "finite{{{}}}", parts.join(", "))
            }
            Locus::Cofinite(excluded) => {
                let parts: Vec<String> = excluded.iter().map(|p| p.to_string()).collect();
                write!(f, "cofinite{{{}}}", parts.join(", "))
            }
        }
    }
}

fn require_line(tower: &DifTower) -> Result<()> {
    match tower.ring() {
        RingDescriptor::PolyRing { .. } => Ok(()),
        other => Err(Error::UnsupportedRing(format!(
            "stratification needs a tower over Q[x], got {}",
            other
        ))),
    }
}

/// Locus where the weight `w` occurs with multiplicity at least `m`: the
/// common vanishing of the `m` lowest coefficients of the Sen polynomial
/// expanded around `T + w` (substitute `T -> T - w`).
pub fn sen_stratum_locus(tower: &DifTower, w: i64, m: u32) -> Result<Locus> {
    require_line(tower)?;
    if m == 0 {
        return Ok(Locus::Everything);
    }
    if m as usize > tower.rank() {
        return Err(Error::InvalidArgument(format!(
            "multiplicity {} exceeds the rank {}",
            m,
            tower.rank()
        )));
    }
    let p = tower.sen_polynomial();
    let shifted = p.shift(&crate::rings::RingElement::from_i64(tower.ring(), -w));
    let coeffs = shifted.coefficient_polys();
    let mut g = UniPoly::zero();
    for c in coeffs.iter().take(m as usize) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.clone() } else { g.gcd(c)? };
    }
    Locus::vanishing(&g)
}

/// The closed locus where the pointwise datum dominates `d`: the meet of
/// the weight-multiplicity loci and the rank-drop loci of the level
/// matrices.
pub fn datum_stratum_locus(tower: &DifTower, d: &DeRhamDatum) -> Result<Locus> {
    require_line(tower)?;
    let mut locus = Locus::Everything;
    for (&w, &m) in d.omega() {
        if m as usize > tower.rank() {
            return Ok(Locus::Empty);
        }
        locus = locus.intersect(&sen_stratum_locus(tower, w, m)?);
        if locus.is_empty() {
            return Ok(locus);
        }
    }
    for (&(k, l), &v) in d.delta() {
        if v == 0 {
            continue;
        }
        let n = tower.tower_matrix(k, l)?;
        let size = n.rows();
        if v as usize > size {
            return Ok(Locus::Empty);
        }
        // pointwise kernel >= v means pointwise rank <= size - v: all
        // minors of size (size - v + 1) vanish, and their gcd is the
        // product of the first size - v + 1 invariant factors
        let g = determinantal_divisor_product(&n, size - v as usize + 1)?;
        locus = locus.intersect(&Locus::vanishing(&g)?);
        if locus.is_empty() {
            return Ok(locus);
        }
    }
    Ok(locus)
}

/// A locally closed stratum: the closed locus of `datum` minus the closed
/// loci of its minimal covers.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub datum: DeRhamDatum,
    pub closed: Locus,
    pub removed: Vec<(DeRhamDatum, Locus)>,
}

impl Stratum {
    pub fn contains_point(&self, a: &Rational) -> bool {
        self.closed.contains_point(a)
            && self.removed.iter().all(|(_, l)| !l.contains_point(a))
    }

    /// Orbits of the finite part actually left in the stratum.
    fn live_orbits(&self) -> Vec<UniPoly> {
        match &self.closed {
            Locus::Finite(orbits) => orbits
                .iter()
                .filter(|p| !self.removed.iter().any(|(_, l)| l.contains_orbit(p)))
                .cloned()
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.closed {
            Locus::Empty => true,
            Locus::Finite(_) => self.live_orbits().is_empty(),
            // an infinite set minus finitely many orbits is never empty,
            // unless a removed locus is everything
            Locus::Everything | Locus::Cofinite(_) => self
                .removed
                .iter()
                .any(|(_, l)| matches!(l, Locus::Everything)),
        }
    }
}

/// Decompose the line into strata for all data supported in `[i, j]` whose
/// locally closed piece is nonempty. Every rational point lies in exactly
/// one stratum, the one matching its truncated pointwise datum.
pub fn strata_decomposition(tower: &DifTower, i: i64, j: i64) -> Result<Vec<Stratum>> {
    require_line(tower)?;
    if i > j {
        return Err(Error::InvalidArgument(format!(
            "empty interval [{}, {}]",
            i, j
        )));
    }
    let seed = crate::family::family_datum(tower)?.truncate(i, j);
    let mut queue = vec![seed];
    let mut visited: Vec<DeRhamDatum> = Vec::new();
    let mut out = Vec::new();
    while let Some(d) = queue.pop() {
        if visited.contains(&d) {
            continue;
        }
        visited.push(d.clone());
        let closed = datum_stratum_locus(tower, &d)?;
        if closed.is_empty() {
            continue;
        }
        let mut removed = Vec::new();
        for cover in d.min_covers(i, j)? {
            let cover_locus = datum_stratum_locus(tower, &cover)?;
            if !cover_locus.is_empty() {
                debug_assert!(
                    cover_locus.subset_of(&closed),
                    "monotone nesting violated: {} vs {}",
                    cover_locus,
                    closed
                );
                removed.push((cover.clone(), cover_locus));
                queue.push(cover);
            }
        }
        let stratum = Stratum {
            datum: d,
            closed,
            removed,
        };
        if !stratum.is_empty() {
            out.push(stratum);
        }
    }
    out.sort_by(|a, b| a.datum.cmp(&b.datum));
    Ok(out)
}

/// Where a report row was evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleSite {
    Point(Rational),
    /// An orbit without rational points, evaluated in `Q[x]/(orbit)`.
    Orbit(UniPoly),
}

impl fmt::Display for SampleSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleSite::Point(a) => write!(f, "x = {}", a),
            SampleSite::Orbit(p) => write!(f, "orbit {}", p),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub site: SampleSite,
    /// Rank over the residue field at the site.
    pub h0: Rational,
    pub h1: Rational,
    pub expected: u32,
}

impl ReportRow {
    pub fn matches(&self) -> bool {
        let e = rat_int(self.expected as i64);
        self.h0 == e && self.h1 == e
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Constant,
    Vacuous,
    Counterexample(SampleSite),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Constant => write!(f, "constant"),
            Verdict::Vacuous => write!(f, "vacuous"),
            Verdict::Counterexample(s) => write!(f, "counterexample at {}", s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StratumReport {
    pub window: (i64, i64),
    pub rows: Vec<ReportRow>,
    pub verdict: Verdict,
}

/// Deterministic sample sequence 0, 1, -1, 2, -2, ...
pub fn sample_sequence() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|n| {
        if n == 0 {
            vec![rat_int(0)]
        } else {
            vec![rat_int(n), rat_int(-n)]
        }
    })
}

/// Evaluate the window cohomology at points of the stratum: exhaustively on
/// a finite locus, at `budget` sampled rational points on a cofinite one.
/// The verdict says whether every value equals the stratum datum.
pub fn stratum_report(
    tower: &DifTower,
    stratum: &Stratum,
    k: i64,
    l: i64,
    budget: usize,
) -> Result<StratumReport> {
    require_line(tower)?;
    if k >= l {
        return Err(Error::EmptyWindow { k, l });
    }
    let expected = stratum.datum.delta_at(k, l);
    let mut rows = Vec::new();
    match &stratum.closed {
        Locus::Empty => {}
        Locus::Finite(_) => {
            for orbit in stratum.live_orbits() {
                if orbit.degree() == Some(1) {
                    let a = -orbit.coeff(0);
                    rows.push(evaluate_at_point(tower, &a, k, l, expected)?);
                } else {
                    rows.push(evaluate_at_orbit(tower, &orbit, k, l, expected)?);
                }
            }
        }
        Locus::Everything | Locus::Cofinite(_) => {
            let mut taken = 0usize;
            for a in sample_sequence() {
                if taken >= budget {
                    break;
                }
                if stratum.contains_point(&a) {
                    rows.push(evaluate_at_point(tower, &a, k, l, expected)?);
                    taken += 1;
                }
            }
        }
    }
    let verdict = if rows.is_empty() {
        Verdict::Vacuous
    } else {
        match rows.iter().find(|r| !r.matches()) {
            None => Verdict::Constant,
            Some(r) => Verdict::Counterexample(r.site.clone()),
        }
    };
    Ok(StratumReport {
        window: (k, l),
        rows,
        verdict,
    })
}

fn evaluate_at_point(
    tower: &DifTower,
    a: &Rational,
    k: i64,
    l: i64,
    expected: u32,
) -> Result<ReportRow> {
    let m = RingMap::evaluate_at(tower.ring().clone(), a.clone())?;
    let dims = cohomology_dims(tower, k, l, Site::Map(&m))?;
    Ok(ReportRow {
        site: SampleSite::Point(a.clone()),
        h0: rat_int(dims.h0 as i64),
        h1: rat_int(dims.h1 as i64),
        expected,
    })
}

fn evaluate_at_orbit(
    tower: &DifTower,
    orbit: &UniPoly,
    k: i64,
    l: i64,
    expected: u32,
) -> Result<ReportRow> {
    let m = RingMap::project_to_quotient(tower.ring().clone(), orbit.clone())?;
    let dims = cohomology_dims(tower, k, l, Site::Map(&m))?;
    let deg = rat_int(orbit.degree().unwrap_or(1) as i64);
    Ok(ReportRow {
        site: SampleSite::Orbit(orbit.clone()),
        h0: rat_int(dims.h0 as i64) / &deg,
        h1: rat_int(dims.h1 as i64) / &deg,
        expected,
    })
}

/// The truncated pointwise datum at a rational point; the quantity strata
/// classify.
pub fn pointwise_datum_at(
    tower: &DifTower,
    a: &Rational,
    i: i64,
    j: i64,
) -> Result<DeRhamDatum> {
    let m = RingMap::evaluate_at(tower.ring().clone(), a.clone())?;
    Ok(pointwise_datum(tower, &m)?.truncate(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::{Delta, Omega};
    use crate::linalg::matrix::Matrix;
    use crate::rings::RingElement;

    fn qx() -> RingDescriptor {
        RingDescriptor::poly_ring("x")
    }

    fn running_example() -> DifTower {
        let r = qx();
        let a0 = Matrix::from_i64(&r, 2, 2, &[0, 0, 0, -1]);
        let mut a1 = Matrix::zero(&r, 2, 2);
        a1.set(1, 0, RingElement::variable(&r).unwrap());
        DifTower::new(r, 2, vec![a0, a1]).unwrap()
    }

    /// A_0 = [[0, 1], [0, x]] over Q[x]: weight 0 everywhere, double at 0.
    fn mw_tower() -> DifTower {
        let r = qx();
        let mut a0 = Matrix::zero(&r, 2, 2);
        a0.set(0, 1, RingElement::one(&r));
        a0.set(1, 1, RingElement::variable(&r).unwrap());
        DifTower::new(r, 2, vec![a0]).unwrap()
    }

    fn x_poly() -> UniPoly {
        UniPoly::from_i64_coeffs(&[0, 1])
    }

    #[test]
    fn locus_algebra() {
        let a = Locus::finite(vec![x_poly(), UniPoly::from_i64_coeffs(&[-1, 1])]);
        let b = Locus::cofinite(vec![x_poly()]);
        let i = a.intersect(&b);
        assert_eq!(i, Locus::finite(vec![UniPoly::from_i64_coeffs(&[-1, 1])]));
        assert!(i.subset_of(&a));
        assert!(!a.subset_of(&i));
        assert!(i.contains_point(&rat_int(1)));
        assert!(!i.contains_point(&rat_int(0)));
        assert!(Locus::Empty.subset_of(&i));
        assert!(b.subset_of(&Locus::Everything));
        assert_eq!(
            Locus::cofinite(vec![]),
            Locus::Everything
        );
        assert_eq!(Locus::finite(vec![]), Locus::Empty);
    }

    #[test]
    fn locus_membership_matches_pointwise_semantics() {
        let cof = Locus::cofinite(vec![x_poly()]);
        for n in -3..4 {
            assert_eq!(cof.contains_point(&rat_int(n)), n != 0);
        }
    }

    #[test]
    fn sen_locus_examples() {
        // running example: weight 0 present everywhere
        let re = running_example();
        assert_eq!(sen_stratum_locus(&re, 0, 1).unwrap(), Locus::Everything);
        // [[0,1],[0,x]]: double weight 0 exactly at x = 0
        let mw = mw_tower();
        assert_eq!(
            sen_stratum_locus(&mw, 0, 2).unwrap(),
            Locus::finite(vec![x_poly()])
        );
        // A_0 = [5]: no weight 0 anywhere
        let r = qx();
        let t5 = DifTower::new(r.clone(), 1, vec![Matrix::from_i64(&r, 1, 1, &[5])]).unwrap();
        assert_eq!(sen_stratum_locus(&t5, 0, 1).unwrap(), Locus::Empty);
        // shifted weight: A_0 = [-5] has weight 5 everywhere
        let tm5 = DifTower::new(r.clone(), 1, vec![Matrix::from_i64(&r, 1, 1, &[-5])]).unwrap();
        assert_eq!(sen_stratum_locus(&tm5, 5, 1).unwrap(), Locus::Everything);
        assert_eq!(sen_stratum_locus(&tm5, 0, 1).unwrap(), Locus::Empty);
        // multiplicity above the rank is an error
        assert!(sen_stratum_locus(&tm5, 5, 2).is_err());
    }

    #[test]
    fn datum_locus_examples() {
        let re = running_example();
        let generic = crate::family::family_datum(&re).unwrap();
        assert_eq!(datum_stratum_locus(&re, &generic).unwrap(), Locus::Everything);
        // the full datum with Delta(0,2) = 2 lives only at x = 0
        let full = crate::datum::full_datum(generic.omega());
        assert_eq!(
            datum_stratum_locus(&re, &full).unwrap(),
            Locus::finite(vec![x_poly()])
        );
        // multiplicity above the rank: empty
        let mut omega = Omega::new();
        omega.insert(0, 3);
        let mut delta = Delta::new();
        delta.insert((0, 1), 3);
        let big = DeRhamDatum::validate(&omega, &delta).unwrap();
        assert_eq!(datum_stratum_locus(&re, &big).unwrap(), Locus::Empty);
    }

    #[test]
    fn decomposition_running_example() {
        let re = running_example();
        let strata = strata_decomposition(&re, 0, 1).unwrap();
        assert_eq!(strata.len(), 2);
        let generic = crate::family::family_datum(&re).unwrap();
        let full = crate::datum::full_datum(generic.omega());
        let s_gen = strata.iter().find(|s| s.datum == generic).unwrap();
        let s_full = strata.iter().find(|s| s.datum == full).unwrap();
        assert_eq!(s_gen.closed, Locus::Everything);
        assert_eq!(s_full.closed, Locus::finite(vec![x_poly()]));
        // disjoint cover at sample points
        for a in [-3i64, -1, 0, 1, 2, 7] {
            let a = rat_int(a);
            let members: Vec<_> = strata.iter().filter(|s| s.contains_point(&a)).collect();
            assert_eq!(members.len(), 1, "point {} not in exactly one stratum", a);
            let d = pointwise_datum_at(&re, &a, 0, 1).unwrap();
            assert_eq!(members[0].datum, d);
        }
    }

    #[test]
    fn decomposition_diagonal_tower_is_single_stratum() {
        let r = qx();
        let a0 = Matrix::from_i64(&r, 2, 2, &[0, 0, 0, -1]);
        let t = DifTower::new(r.clone(), 2, vec![a0, Matrix::zero(&r, 2, 2)]).unwrap();
        let strata = strata_decomposition(&t, 0, 1).unwrap();
        assert_eq!(strata.len(), 1);
        assert_eq!(strata[0].closed, Locus::Everything);
        assert!(strata[0].removed.iter().all(|(_, l)| l.is_empty()) || strata[0].removed.is_empty());
    }

    #[test]
    fn decomposition_non_semisimple_degeneration() {
        // [[0,1],[0,x]] on [0,0]: generic weight {0:1}; at x=0 the weight
        // doubles but the kernel stays 1-dimensional
        let mw = mw_tower();
        let strata = strata_decomposition(&mw, 0, 0).unwrap();
        assert_eq!(strata.len(), 2);
        let mut omega = Omega::new();
        omega.insert(0, 2);
        let mut delta = Delta::new();
        delta.insert((0, 1), 1);
        let degenerate = DeRhamDatum::validate(&omega, &delta).unwrap();
        let s = strata.iter().find(|s| s.datum == degenerate).unwrap();
        assert_eq!(s.closed, Locus::finite(vec![x_poly()]));
        // and the semisimple-looking datum with kernel 2 is nowhere
        let mut delta2 = Delta::new();
        delta2.insert((0, 1), 2);
        let semisimple = DeRhamDatum::validate(&omega, &delta2).unwrap();
        assert_eq!(datum_stratum_locus(&mw, &semisimple).unwrap(), Locus::Empty);
    }

    #[test]
    fn report_running_example() {
        let re = running_example();
        let strata = strata_decomposition(&re, 0, 1).unwrap();
        let generic = crate::family::family_datum(&re).unwrap();
        let s_gen = strata.iter().find(|s| s.datum == generic).unwrap();
        let rep = stratum_report(&re, s_gen, 0, 2, 25).unwrap();
        assert_eq!(rep.verdict, Verdict::Constant);
        assert_eq!(rep.rows.len(), 25);
        assert!(rep.rows.iter().all(|r| r.h1 == rat_int(1)));
        // the closed stratum at x = 0
        let full = crate::datum::full_datum(generic.omega());
        let s_full = strata.iter().find(|s| s.datum == full).unwrap();
        let rep0 = stratum_report(&re, s_full, 0, 2, 25).unwrap();
        assert_eq!(rep0.verdict, Verdict::Constant);
        assert_eq!(rep0.rows.len(), 1);
        assert_eq!(rep0.rows[0].h1, rat_int(2));
    }

    #[test]
    fn report_on_irrational_orbit() {
        // A_0 = diag(x^2 - 2, 0)... weight 0 has multiplicity 2 exactly
        // where x^2 = 2, an irrational orbit: evaluation passes to
        // Q[x]/(x^2 - 2)
        let r = qx();
        let e = RingElement::new(r.clone(), UniPoly::from_i64_coeffs(&[-2, 0, 1])).unwrap();
        let a0 = Matrix::diag(&r, &[e, RingElement::zero(&r)]);
        let t = DifTower::new(r.clone(), 2, vec![a0]).unwrap();
        let strata = strata_decomposition(&t, 0, 0).unwrap();
        let deg = strata
            .iter()
            .find(|s| s.datum.omega_at(0) == 2)
            .expect("degenerate stratum exists");
        assert_eq!(
            deg.closed,
            Locus::finite(vec![UniPoly::from_i64_coeffs(&[-2, 0, 1])])
        );
        let rep = stratum_report(&t, deg, 0, 1, 25).unwrap();
        assert_eq!(rep.verdict, Verdict::Constant);
        assert_eq!(rep.rows.len(), 1);
        assert!(matches!(rep.rows[0].site, SampleSite::Orbit(_)));
        assert_eq!(rep.rows[0].h0, rat_int(2));
    }

    #[test]
    fn monotone_nesting() {
        let re = running_example();
        let generic = crate::family::family_datum(&re).unwrap();
        let full = crate::datum::full_datum(generic.omega());
        let lg = datum_stratum_locus(&re, &generic).unwrap();
        let lf = datum_stratum_locus(&re, &full).unwrap();
        assert!(generic.less_equal(&full));
        assert!(lf.subset_of(&lg));
    }

    #[test]
    fn sample_sequence_order() {
        let first: Vec<Rational> = sample_sequence().take(5).collect();
        assert_eq!(
            first,
            vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(2), rat_int(-2)]
        );
    }
}
