//! The de Rham datum calculus.
//!
//! A datum is a pair `(Omega, Delta)`: weight multiplicities and, for each
//! integer interval, a period dimension. The four axioms:
//!
//!   (i)   `Omega` is finitely supported,
//!   (ii)  `Delta(i, j) = 0` for `i >= j`,
//!   (iii) `min(Omega(i), 1) <= Delta(i, i+1) <= Omega(i)`,
//!   (iv)  `max(Delta(i,j), Delta(j,k)) <= Delta(i,k) <= Delta(i,j) + Delta(j,k)`
//!         for `i <= j <= k`.
//!
//! A datum is determined by `Delta` on the support window `[L, U+1]`; values
//! outside are obtained by clamping the indices into the window. Only the
//! window values are stored, every window pair explicitly, which makes
//! equality canonical.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

pub type Omega = BTreeMap<i64, u32>;
pub type Delta = BTreeMap<(i64, i64), u32>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeRhamDatum {
    omega: Omega,
    delta: Delta,
}

/// A violated axiom, with witness indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `Delta(i, j) > 0` with `i >= j`.
    ConditionII { i: i64, j: i64 },
    /// Step bound `min(Omega(i),1) <= Delta(i,i+1) <= Omega(i)` broken.
    ConditionIII { i: i64 },
    /// `max(Delta(i,j), Delta(j,k)) > Delta(i,k)`.
    ConditionIVLower { i: i64, j: i64, k: i64 },
    /// `Delta(i,k) > Delta(i,j) + Delta(j,k)`.
    ConditionIVUpper { i: i64, j: i64, k: i64 },
    /// A value outside the support window disagrees with the clamp rule.
    ExtensionRule { i: i64, j: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ConditionII { i, j } => {
                write!(f, "condition (ii) at ({}, {}): nonzero below the diagonal", i, j)
            }
            Violation::ConditionIII { i } => {
                write!(f, "condition (iii) at {}: step outside [min(Omega,1), Omega]", i)
            }
            Violation::ConditionIVLower { i, j, k } => {
                write!(f, "condition (iv) at ({}, {}, {}): below max of the parts", i, j, k)
            }
            Violation::ConditionIVUpper { i, j, k } => {
                write!(f, "condition (iv) at ({}, {}, {}): above the sum of the parts", i, j, k)
            }
            Violation::ExtensionRule { i, j } => {
                write!(f, "extension rule at ({}, {}): disagrees with window clamp", i, j)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub full: bool,
    pub hodge_tate: bool,
    pub sen: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociatedKind {
    HodgeTate,
    Sen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatumOrder {
    Eq,
    Lt,
    Gt,
    Incomparable,
}

impl DeRhamDatum {
    pub fn zero() -> Self {
        DeRhamDatum {
            omega: BTreeMap::new(),
            delta: BTreeMap::new(),
        }
    }

    /// Validate a candidate pair. On success the datum is stored in
    /// canonical form: `Omega` without zeros, `Delta` on exactly the window
    /// pairs. On failure every violated condition is reported.
    pub fn validate(
        omega: &Omega,
        delta: &Delta,
    ) -> std::result::Result<DeRhamDatum, Vec<Violation>> {
        let mut violations = Vec::new();
        let omega: Omega = omega
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&w, &m)| (w, m))
            .collect();
        for (&(i, j), &v) in delta {
            if i >= j && v > 0 {
                violations.push(Violation::ConditionII { i, j });
            }
        }
        let bounds = bounds_of(&omega);
        let mut stored: Delta = BTreeMap::new();
        match bounds {
            None => {
                // zero datum: every provided value must vanish
                for (&(i, j), &v) in delta {
                    if i < j && v > 0 {
                        violations.push(Violation::ExtensionRule { i, j });
                    }
                }
            }
            Some((lo, up)) => {
                for i in lo..=up {
                    for j in i + 1..=up + 1 {
                        stored.insert((i, j), delta.get(&(i, j)).copied().unwrap_or(0));
                    }
                }
                let get = |k: i64, l: i64| -> u32 {
                    if k >= l {
                        return 0;
                    }
                    let ck = k.clamp(lo, up + 1);
                    let cl = l.clamp(lo, up + 1);
                    if ck >= cl {
                        0
                    } else {
                        stored[&(ck, cl)]
                    }
                };
                // (iii)
                for i in lo..=up {
                    let m = omega.get(&i).copied().unwrap_or(0);
                    let step = get(i, i + 1);
                    if step < m.min(1) || step > m {
                        violations.push(Violation::ConditionIII { i });
                    }
                }
                // (iv) on window triples
                for i in lo..=up + 1 {
                    for j in i + 1..=up + 1 {
                        for k in j + 1..=up + 1 {
                            let dij = get(i, j);
                            let djk = get(j, k);
                            let dik = get(i, k);
                            if dik < dij.max(djk) {
                                violations.push(Violation::ConditionIVLower { i, j, k });
                            }
                            if dik > dij + djk {
                                violations.push(Violation::ConditionIVUpper { i, j, k });
                            }
                        }
                    }
                }
                // extension consistency for provided out-of-window pairs
                for (&(i, j), &v) in delta {
                    if i < j && !(lo <= i && j <= up + 1) && v != get(i, j) {
                        violations.push(Violation::ExtensionRule { i, j });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(DeRhamDatum {
                omega,
                delta: stored,
            })
        } else {
            Err(violations)
        }
    }

    fn from_parts(omega: Omega, delta: Delta) -> Self {
        DeRhamDatum::validate(&omega, &delta)
            .unwrap_or_else(|v| panic!("internal construction produced invalid datum: {:?}", v))
    }

    pub fn omega(&self) -> &Omega {
        &self.omega
    }

    /// The stored window values of `Delta`.
    pub fn delta(&self) -> &Delta {
        &self.delta
    }

    pub fn omega_at(&self, w: i64) -> u32 {
        self.omega.get(&w).copied().unwrap_or(0)
    }

    /// `Delta` at any pair, via the window clamp.
    pub fn delta_at(&self, k: i64, l: i64) -> u32 {
        if k >= l {
            return 0;
        }
        let Some((lo, up)) = self.bounds() else {
            return 0;
        };
        let ck = k.clamp(lo, up + 1);
        let cl = l.clamp(lo, up + 1);
        if ck >= cl {
            0
        } else {
            self.delta[&(ck, cl)]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.omega.is_empty()
    }

    /// `(L, U)`: least and greatest weights, `None` for the zero datum.
    pub fn bounds(&self) -> Option<(i64, i64)> {
        bounds_of(&self.omega)
    }

    /// Is the support contained in `[i, j]`?
    pub fn supported_in(&self, i: i64, j: i64) -> bool {
        self.bounds().map_or(true, |(lo, up)| i <= lo && up <= j)
    }

    pub fn classify(&self) -> Classification {
        let Some((lo, up)) = self.bounds() else {
            return Classification {
                full: true,
                hodge_tate: true,
                sen: true,
            };
        };
        let mut steps_full = true;
        let mut steps_sen = true;
        for i in lo..=up {
            let m = self.omega_at(i);
            let s = self.delta_at(i, i + 1);
            if s != m {
                steps_full = false;
            }
            if s != m.min(1) {
                steps_sen = false;
            }
        }
        let mut additive = true;
        let mut maximal = true;
        for i in lo..=up + 1 {
            for j in i + 1..=up + 1 {
                for k in j + 1..=up + 1 {
                    let dik = self.delta_at(i, k);
                    let dij = self.delta_at(i, j);
                    let djk = self.delta_at(j, k);
                    if dik != dij + djk {
                        additive = false;
                    }
                    if dik != dij.max(djk) {
                        maximal = false;
                    }
                }
            }
        }
        let hodge_tate = maximal;
        Classification {
            full: steps_full && additive,
            hodge_tate,
            sen: hodge_tate && steps_sen,
        }
    }

    /// The associated Hodge-Tate or Sen datum: same weights, `Delta`
    /// replaced by the max of the step values (Hodge-Tate) or of
    /// `min(Omega, 1)` (Sen) over the interval.
    pub fn associated(&self, kind: AssociatedKind) -> DeRhamDatum {
        let Some((lo, up)) = self.bounds() else {
            return DeRhamDatum::zero();
        };
        let step = |i: i64| -> u32 {
            match kind {
                AssociatedKind::HodgeTate => self.delta_at(i, i + 1),
                AssociatedKind::Sen => self.omega_at(i).min(1),
            }
        };
        let mut delta = Delta::new();
        for i in lo..=up {
            for j in i + 1..=up + 1 {
                let v = (i..j).map(step).max().unwrap_or(0);
                delta.insert((i, j), v);
            }
        }
        DeRhamDatum::from_parts(self.omega.clone(), delta)
    }

    /// `(sd, htd, drd)`: total weight count, sum of steps, max of `Delta`.
    pub fn dimensions(&self) -> (u32, u32, u32) {
        let sd = self.omega.values().sum();
        let (htd, drd) = match self.bounds() {
            None => (0, 0),
            Some((lo, up)) => {
                let htd = (lo..=up).map(|i| self.delta_at(i, i + 1)).sum();
                let drd = self.delta.values().copied().max().unwrap_or(0);
                (htd, drd)
            }
        };
        (sd, htd, drd)
    }

    /// Sum of the step values over `[k, l)`.
    pub fn htd_range(&self, k: i64, l: i64) -> u32 {
        let Some((lo, up)) = self.bounds() else {
            return 0;
        };
        let a = k.max(lo);
        let b = (l - 1).min(up);
        if a > b {
            return 0;
        }
        (a..=b).map(|i| self.delta_at(i, i + 1)).sum()
    }

    /// Shift of weights: `Omega'(i) = Omega(i + n)`.
    pub fn twist(&self, n: i64) -> DeRhamDatum {
        let omega: Omega = self.omega.iter().map(|(&w, &m)| (w - n, m)).collect();
        let delta: Delta = self
            .delta
            .iter()
            .map(|(&(i, j), &v)| ((i - n, j - n), v))
            .collect();
        DeRhamDatum::from_parts(omega, delta)
    }

    /// Restriction to `[i, j]`: weights outside dropped, `Delta` indices
    /// clamped into `[i, j+1]`.
    pub fn truncate(&self, i: i64, j: i64) -> DeRhamDatum {
        let omega: Omega = self
            .omega
            .iter()
            .filter(|(&w, _)| i <= w && w <= j)
            .map(|(&w, &m)| (w, m))
            .collect();
        let Some((lo, up)) = bounds_of(&omega) else {
            return DeRhamDatum::zero();
        };
        let mut delta = Delta::new();
        for k in lo..=up {
            for l in k + 1..=up + 1 {
                delta.insert((k, l), self.delta_at(k.max(i), l.min(j + 1)));
            }
        }
        DeRhamDatum::from_parts(omega, delta)
    }

    /// Pointwise comparison of `Omega` and `Delta`.
    pub fn pointwise_cmp(&self, other: &DeRhamDatum) -> DatumOrder {
        let mut le = true;
        let mut ge = true;
        let weights: std::collections::BTreeSet<i64> = self
            .omega
            .keys()
            .chain(other.omega.keys())
            .copied()
            .collect();
        for w in weights {
            let a = self.omega_at(w);
            let b = other.omega_at(w);
            if a > b {
                le = false;
            }
            if a < b {
                ge = false;
            }
        }
        let lo = self
            .bounds()
            .into_iter()
            .chain(other.bounds())
            .map(|(l, _)| l)
            .min();
        let up = self
            .bounds()
            .into_iter()
            .chain(other.bounds())
            .map(|(_, u)| u)
            .max();
        if let (Some(lo), Some(up)) = (lo, up) {
            for i in lo..=up {
                for j in i + 1..=up + 1 {
                    let a = self.delta_at(i, j);
                    let b = other.delta_at(i, j);
                    if a > b {
                        le = false;
                    }
                    if a < b {
                        ge = false;
                    }
                }
            }
        }
        match (le, ge) {
            (true, true) => DatumOrder::Eq,
            (true, false) => DatumOrder::Lt,
            (false, true) => DatumOrder::Gt,
            (false, false) => DatumOrder::Incomparable,
        }
    }

    /// Comparison plus, when an interval is given, the flag for the strict
    /// relation with support constraint: `self < other` and
    /// `supp(other) <= [i, j]`.
    pub fn compare(
        &self,
        other: &DeRhamDatum,
        interval: Option<(i64, i64)>,
    ) -> (DatumOrder, Option<bool>) {
        let order = self.pointwise_cmp(other);
        let flag = interval.map(|(i, j)| order == DatumOrder::Lt && other.supported_in(i, j));
        (order, flag)
    }

    pub fn less_equal(&self, other: &DeRhamDatum) -> bool {
        matches!(
            self.pointwise_cmp(other),
            DatumOrder::Eq | DatumOrder::Lt
        )
    }

    pub fn less_than(&self, other: &DeRhamDatum) -> bool {
        self.pointwise_cmp(other) == DatumOrder::Lt
    }

    /// The datum with one more weight at `w` and every `Delta` over an
    /// interval containing `w` raised to at least 1.
    pub fn weight_bump(&self, w: i64) -> DeRhamDatum {
        let mut omega = self.omega.clone();
        *omega.entry(w).or_insert(0) += 1;
        let (lo, up) = bounds_of(&omega).expect("nonempty after bump");
        let mut delta = Delta::new();
        for i in lo..=up {
            for j in i + 1..=up + 1 {
                let base = self.delta_at(i, j);
                let v = if i <= w && w < j { base.max(1) } else { base };
                delta.insert((i, j), v);
            }
        }
        DeRhamDatum::from_parts(omega, delta)
    }

    /// The full datum on the same weights: `Delta(i,j) = sum of Omega over
    /// [i, j)`.
    pub fn full_on_omega(&self) -> DeRhamDatum {
        full_datum(&self.omega)
    }

    /// Minimal valid data strictly greater than `self` with support in
    /// `[i, j]`: the answer to "what can a datum degenerate to next".
    pub fn min_covers(&self, i: i64, j: i64) -> Result<Vec<DeRhamDatum>> {
        if i > j {
            return Err(Error::InvalidArgument(format!(
                "empty interval [{}, {}]",
                i, j
            )));
        }
        if !self.supported_in(i, j) {
            return Err(Error::InvalidArgument(format!(
                "support not contained in [{}, {}]",
                i, j
            )));
        }
        let mut pool: Vec<DeRhamDatum> = Vec::new();
        for w in i..=j {
            pool.push(self.weight_bump(w));
        }
        // all strictly larger data on the same weights
        for e in enumerate_deltas_between(&self.omega, Some(self), None) {
            if self.less_than(&e) {
                pool.push(e);
            }
        }
        pool.sort();
        pool.dedup();

        // keep the minimal elements, then re-verify minimality by searching
        // the box between self and each survivor
        loop {
            let minimal: Vec<DeRhamDatum> = pool
                .iter()
                .filter(|c| !pool.iter().any(|o| *o != **c && o.less_than(c)))
                .cloned()
                .collect();
            let mut grown = false;
            for s in &minimal {
                if let Some(between) = find_strictly_between(self, s) {
                    if !pool.contains(&between) {
                        pool.push(between);
                        pool.sort();
                        grown = true;
                    }
                }
            }
            if !grown {
                return Ok(minimal);
            }
        }
    }
}

impl fmt::Display for DeRhamDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "omega: {{")?;
        for (n, (w, m)) in self.omega.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", w, m)?;
        }
        write!(f, "}}; delta: {{")?;
        for (n, ((i, j), v)) in self.delta.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{}): {}", i, j, v)?;
        }
        write!(f, "}}")
    }
}

fn bounds_of(omega: &Omega) -> Option<(i64, i64)> {
    let lo = omega.iter().find(|(_, &m)| m > 0).map(|(&w, _)| w)?;
    let up = omega.iter().rev().find(|(_, &m)| m > 0).map(|(&w, _)| w)?;
    Some((lo, up))
}

/// The full datum on a given weight function.
pub fn full_datum(omega: &Omega) -> DeRhamDatum {
    let cleaned: Omega = omega
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(&w, &m)| (w, m))
        .collect();
    let Some((lo, up)) = bounds_of(&cleaned) else {
        return DeRhamDatum::zero();
    };
    let mut delta = Delta::new();
    for i in lo..=up {
        for j in i + 1..=up + 1 {
            let v = (i..j).map(|w| cleaned.get(&w).copied().unwrap_or(0)).sum();
            delta.insert((i, j), v);
        }
    }
    DeRhamDatum::from_parts(cleaned, delta)
}

/// All valid data on the weights `omega` with `lower <= Delta` (extended
/// values) and, when given, `Delta <= upper`. Depth-first over window cells
/// ordered by span, with the axioms propagated as interval bounds.
fn enumerate_deltas_between(
    omega: &Omega,
    lower: Option<&DeRhamDatum>,
    upper: Option<&DeRhamDatum>,
) -> Vec<DeRhamDatum> {
    let Some((lo, up)) = bounds_of(omega) else {
        return vec![DeRhamDatum::zero()];
    };
    let mut cells: Vec<(i64, i64)> = Vec::new();
    for i in lo..=up {
        for j in i + 1..=up + 1 {
            cells.push((i, j));
        }
    }
    cells.sort_by_key(|&(i, j)| (j - i, i));
    let mut out = Vec::new();
    let mut current: Delta = BTreeMap::new();
    dfs_deltas(omega, &cells, 0, &mut current, lower, upper, &mut out);
    out
}

fn dfs_deltas(
    omega: &Omega,
    cells: &[(i64, i64)],
    idx: usize,
    current: &mut Delta,
    lower: Option<&DeRhamDatum>,
    upper: Option<&DeRhamDatum>,
    out: &mut Vec<DeRhamDatum>,
) {
    if idx == cells.len() {
        out.push(DeRhamDatum::from_parts(omega.clone(), current.clone()));
        return;
    }
    let (i, j) = cells[idx];
    let mut min_v: u32;
    let mut max_v: u32;
    if j - i == 1 {
        let m = omega.get(&i).copied().unwrap_or(0);
        min_v = m.min(1);
        max_v = m;
    } else {
        // all strictly shorter subintervals are already assigned
        min_v = 0;
        max_v = u32::MAX;
        for mid in i + 1..j {
            let a = current[&(i, mid)];
            let b = current[&(mid, j)];
            min_v = min_v.max(a.max(b));
            max_v = max_v.min(a + b);
        }
    }
    if let Some(d) = lower {
        min_v = min_v.max(d.delta_at(i, j));
    }
    if let Some(d) = upper {
        max_v = max_v.min(d.delta_at(i, j));
    }
    if min_v > max_v {
        return;
    }
    for v in min_v..=max_v {
        current.insert((i, j), v);
        dfs_deltas(omega, cells, idx + 1, current, lower, upper, out);
    }
    current.remove(&(i, j));
}

/// Some valid datum strictly between `d` and `s`, if one exists.
fn find_strictly_between(d: &DeRhamDatum, s: &DeRhamDatum) -> Option<DeRhamDatum> {
    // candidate weight functions between the two, product over the support
    let weights: Vec<i64> = s.omega().keys().copied().collect();
    let mut omegas: Vec<Omega> = vec![BTreeMap::new()];
    for &w in &weights {
        let a = d.omega_at(w);
        let b = s.omega_at(w);
        let mut next = Vec::new();
        for base in &omegas {
            for m in a..=b {
                let mut o = base.clone();
                if m > 0 {
                    o.insert(w, m);
                }
                next.push(o);
            }
        }
        omegas = next;
    }
    for omega in omegas {
        for e in enumerate_deltas_between(&omega, Some(d), Some(s)) {
            if d.less_than(&e) && e.less_than(s) {
                return Some(e);
            }
        }
    }
    None
}

/// Every valid datum with support in `[i, j]`, `Omega <= omega_cap`
/// pointwise and every stored `Delta <= delta_cap`. Grid enumeration for
/// exhaustive searches.
pub fn enumerate_valid_data_on_grid(
    i: i64,
    j: i64,
    omega_cap: u32,
    delta_cap: u32,
) -> Vec<DeRhamDatum> {
    let weights: Vec<i64> = (i..=j).collect();
    let mut omegas: Vec<Omega> = vec![BTreeMap::new()];
    for &w in &weights {
        let mut next = Vec::new();
        for base in &omegas {
            for m in 0..=omega_cap {
                let mut o = base.clone();
                if m > 0 {
                    o.insert(w, m);
                }
                next.push(o);
            }
        }
        omegas = next;
    }
    let cap = cap_datum(i, j, delta_cap);
    let mut out = Vec::new();
    for omega in omegas {
        for e in enumerate_deltas_between(&omega, None, Some(&cap)) {
            out.push(e);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A synthetic upper bound datum: `delta_cap` on every pair over `[i, j]`.
fn cap_datum(i: i64, j: i64, delta_cap: u32) -> DeRhamDatum {
    if delta_cap == 0 {
        return DeRhamDatum::zero();
    }
    let omega: Omega = (i..=j).map(|w| (w, delta_cap)).collect();
    let mut delta = Delta::new();
    for k in i..=j {
        for l in k + 1..=j + 1 {
            delta.insert((k, l), delta_cap);
        }
    }
    DeRhamDatum::from_parts(omega, delta)
}
