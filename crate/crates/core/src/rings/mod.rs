//! Coefficient rings: `Q`, `Q[x]`, `Q[x]/(f)`, their elements and the
//! homomorphisms between them.

pub mod factor;
pub mod poly;
pub mod rational;

use crate::error::{Error, Result};
use poly::UniPoly;
use rational::Rational;
use num_traits::{One, Zero};
use std::fmt;

/// A supported coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rationals,
    PolyRing { var: String },
    Quotient { var: String, modulus: UniPoly },
}

impl RingDescriptor {
    pub fn rationals() -> Self {
        RingDescriptor::Rationals
    }

    pub fn poly_ring(var: &str) -> Self {
        RingDescriptor::PolyRing {
            var: var.to_string(),
        }
    }

    /// Quotient by a monic modulus of degree >= 1; the modulus is normalized
    /// monic here, so any nonconstant polynomial is accepted.
    pub fn quotient(var: &str, modulus: UniPoly) -> Result<Self> {
        if modulus.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidArgument(format!(
                "quotient modulus must have degree >= 1, got {}",
                modulus
            )));
        }
        Ok(RingDescriptor::Quotient {
            var: var.to_string(),
            modulus: modulus.monic(),
        })
    }

    pub fn var(&self) -> Option<&str> {
        match self {
            RingDescriptor::Rationals => None,
            RingDescriptor::PolyRing { var } | RingDescriptor::Quotient { var, .. } => Some(var),
        }
    }

    pub fn modulus(&self) -> Option<&UniPoly> {
        match self {
            RingDescriptor::Quotient { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// Integral domain? (`Q` and `Q[x]` always; a quotient only by an
    /// irreducible modulus, which we do not certify here, so `false`.)
    pub fn is_integral(&self) -> bool {
        !matches!(self, RingDescriptor::Quotient { .. })
    }

    pub fn is_pid(&self) -> bool {
        self.is_integral()
    }

    /// Dimension over `Q`, when finite.
    pub fn qdim(&self) -> Option<usize> {
        match self {
            RingDescriptor::Rationals => Some(1),
            RingDescriptor::PolyRing { .. } => None,
            RingDescriptor::Quotient { modulus, .. } => modulus.degree(),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::PolyRing { var } => write!(f, "Q[{}]", var),
            RingDescriptor::Quotient { var, modulus } => {
                write!(f, "Q[{}]/({})", var, modulus.display_with(var))
            }
        }
    }
}

/// An element of one of the supported rings: a polynomial in the ring
/// variable, constant over `Q`, reduced modulo the modulus in a quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingDescriptor,
    value: UniPoly,
}

impl RingElement {
    pub fn new(ring: RingDescriptor, value: UniPoly) -> Result<Self> {
        let value = match &ring {
            RingDescriptor::Rationals => {
                if !value.is_constant() {
                    return Err(Error::InvalidArgument(format!(
                        "nonconstant value {} in Q",
                        value
                    )));
                }
                value
            }
            RingDescriptor::PolyRing { .. } => value,
            RingDescriptor::Quotient { modulus, .. } => value.div_rem(modulus)?.1,
        };
        Ok(RingElement { ring, value })
    }

    pub fn from_rational(ring: &RingDescriptor, c: Rational) -> Self {
        RingElement {
            ring: ring.clone(),
            value: UniPoly::constant(c),
        }
    }

    pub fn from_i64(ring: &RingDescriptor, c: i64) -> Self {
        Self::from_rational(ring, rational::rat_int(c))
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        RingElement {
            ring: ring.clone(),
            value: UniPoly::zero(),
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::from_rational(ring, Rational::one())
    }

    /// The ring variable as an element; errors over `Q`.
    pub fn variable(ring: &RingDescriptor) -> Result<Self> {
        match ring {
            RingDescriptor::Rationals => Err(Error::UnsupportedRing(
                "Q has no ring variable".to_string(),
            )),
            _ => RingElement::new(ring.clone(), UniPoly::variable()),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn value(&self) -> &UniPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// For elements of `Q`, the rational value.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.value.is_constant() {
            Some(self.value.coeff(0))
        } else {
            None
        }
    }

    fn check_same_ring(&self, other: &RingElement) {
        assert_eq!(
            self.ring, other.ring,
            "ring mismatch: {} vs {}",
            self.ring, other.ring
        );
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.check_same_ring(other);
        RingElement {
            ring: self.ring.clone(),
            value: &self.value + &other.value,
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.check_same_ring(other);
        RingElement {
            ring: self.ring.clone(),
            value: &self.value - &other.value,
        }
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            value: -&self.value,
        }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.check_same_ring(other);
        let raw = &self.value * &other.value;
        let value = match &self.ring {
            RingDescriptor::Quotient { modulus, .. } => {
                raw.div_rem(modulus).expect("nonzero modulus").1
            }
            _ => raw,
        };
        RingElement {
            ring: self.ring.clone(),
            value,
        }
    }

    pub fn pow(&self, mut e: u32) -> RingElement {
        let mut base = self.clone();
        let mut acc = RingElement::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Unit test: nonzero in `Q`; nonzero constant in `Q[x]`; coprime to the
    /// modulus in a quotient.
    pub fn is_unit(&self) -> bool {
        match &self.ring {
            RingDescriptor::Rationals => !self.value.is_zero(),
            RingDescriptor::PolyRing { .. } => {
                self.value.is_constant() && !self.value.is_zero()
            }
            RingDescriptor::Quotient { modulus, .. } => {
                if self.value.is_zero() {
                    return false;
                }
                self.value
                    .gcd(modulus)
                    .map_or(false, |g| g.is_constant())
            }
        }
    }

    /// Multiplicative inverse, via Bezout in a quotient.
    pub fn inverse(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let value = match &self.ring {
            RingDescriptor::Rationals | RingDescriptor::PolyRing { .. } => {
                UniPoly::constant(self.value.coeff(0).recip())
            }
            RingDescriptor::Quotient { modulus, .. } => {
                let (g, u, _) = self.value.gcd_bezout(modulus)?;
                // g is a nonzero constant normalized to 1 by gcd_bezout
                debug_assert!(g.is_one());
                u.div_rem(modulus)?.1
            }
        };
        Ok(RingElement {
            ring: self.ring.clone(),
            value,
        })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.ring.var().unwrap_or("x");
        write!(f, "{}", self.value.display_with(var))
    }
}

/// Unit test as a free function, mirroring the operation names used by the
/// command-line layer.
pub fn is_unit(a: &RingElement) -> bool {
    a.is_unit()
}

/// Chinese-remainder idempotents for pairwise coprime factors: elements
/// `e_i` of `Q[x]/(prod factors)` with `e_i = 1 mod factor_i` and
/// `e_i = 0 mod factor_j` for `j != i`.
pub fn crt_idempotents(var: &str, factors: &[UniPoly]) -> Result<Vec<RingElement>> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("need at least one factor".into()));
    }
    for f in factors {
        if f.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidArgument(format!(
                "factor {} must have degree >= 1",
                f
            )));
        }
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let g = factors[i].gcd(&factors[j])?;
            if !g.is_constant() {
                return Err(Error::NotCoprime(
                    factors[i].to_string(),
                    factors[j].to_string(),
                ));
            }
        }
    }
    let mut modulus = UniPoly::one();
    for f in factors {
        modulus = &modulus * f;
    }
    let ring = RingDescriptor::quotient(var, modulus.clone())?;
    let mut out = Vec::with_capacity(factors.len());
    for f in factors {
        let cofactor = modulus.exact_div(f)?;
        // u * cofactor = 1 mod f
        let (g, u, _) = cofactor.gcd_bezout(f)?;
        debug_assert!(g.is_one());
        out.push(RingElement::new(ring.clone(), &u * &cofactor)?);
    }
    Ok(out)
}

/// A homomorphism between supported rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: RingDescriptor,
    target: RingDescriptor,
    kind: RingMapKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingMapKind {
    EvaluateAt(Rational),
    ProjectToQuotient(UniPoly),
    Inclusion,
}

impl RingMap {
    /// Evaluation `x -> a`, from `Q[x]`, or from `Q[x]/(f)` when `f(a) = 0`.
    pub fn evaluate_at(source: RingDescriptor, a: Rational) -> Result<RingMap> {
        match &source {
            RingDescriptor::PolyRing { .. } => {}
            RingDescriptor::Quotient { modulus, .. } => {
                if !modulus.eval(&a).is_zero() {
                    return Err(Error::InvalidMap(format!(
                        "evaluate-at({}) is not defined on {}: modulus does not vanish",
                        a, source
                    )));
                }
            }
            RingDescriptor::Rationals => {
                return Err(Error::InvalidMap(
                    "evaluate-at needs a polynomial source".to_string(),
                ))
            }
        }
        Ok(RingMap {
            source,
            target: RingDescriptor::Rationals,
            kind: RingMapKind::EvaluateAt(a),
        })
    }

    /// Reduction modulo `m`, from `Q[x]` always, or from `Q[x]/(f)` when
    /// `m` divides `f`.
    pub fn project_to_quotient(source: RingDescriptor, m: UniPoly) -> Result<RingMap> {
        let var = source
            .var()
            .ok_or_else(|| Error::InvalidMap("projection needs a polynomial source".into()))?
            .to_string();
        let m = if m.degree().unwrap_or(0) >= 1 {
            m.monic()
        } else {
            return Err(Error::InvalidMap(format!(
                "projection modulus must have degree >= 1, got {}",
                m
            )));
        };
        if let RingDescriptor::Quotient { modulus, .. } = &source {
            if !m.divides(modulus) {
                return Err(Error::InvalidMap(format!(
                    "{} does not divide the source modulus {}",
                    m, modulus
                )));
            }
        }
        let target = RingDescriptor::quotient(&var, m.clone())?;
        Ok(RingMap {
            source,
            target,
            kind: RingMapKind::ProjectToQuotient(m),
        })
    }

    /// The inclusion of `Q` into any ring, or the identity map.
    pub fn inclusion(source: RingDescriptor, target: RingDescriptor) -> Result<RingMap> {
        if source != RingDescriptor::Rationals && source != target {
            return Err(Error::InvalidMap(format!(
                "inclusion only from Q or the identity, got {} -> {}",
                source, target
            )));
        }
        Ok(RingMap {
            source,
            target,
            kind: RingMapKind::Inclusion,
        })
    }

    pub fn identity(ring: RingDescriptor) -> RingMap {
        RingMap {
            source: ring.clone(),
            target: ring,
            kind: RingMapKind::Inclusion,
        }
    }

    pub fn source(&self) -> &RingDescriptor {
        &self.source
    }

    pub fn target(&self) -> &RingDescriptor {
        &self.target
    }

    pub fn kind(&self) -> &RingMapKind {
        &self.kind
    }

    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        if a.ring() != &self.source {
            return Err(Error::IllTypedMap(format!(
                "element of {} fed to a map from {}",
                a.ring(),
                self.source
            )));
        }
        match &self.kind {
            RingMapKind::EvaluateAt(at) => Ok(RingElement::from_rational(
                &self.target,
                a.value().eval(at),
            )),
            RingMapKind::ProjectToQuotient(_) => {
                RingElement::new(self.target.clone(), a.value().clone())
            }
            RingMapKind::Inclusion => RingElement::new(self.target.clone(), a.value().clone()),
        }
    }
}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingMapKind::EvaluateAt(a) => write!(f, "{} -> {}, {} -> {}", self.source, self.target,
                self.source.var().unwrap_or("x"), a),
            RingMapKind::ProjectToQuotient(m) => {
                write!(f, "{} -> {} (mod {})", self.source, self.target, m)
            }
            RingMapKind::Inclusion => write!(f, "{} -> {} (inclusion)", self.source, self.target),
        }
    }
}

/// Apply a ring map to one element; the free-function spelling of the
/// operation.
pub fn apply_ring_map(a: &RingElement, m: &RingMap) -> Result<RingElement> {
    m.apply(a)
}
