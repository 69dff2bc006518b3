//! Polynomials in an operator variable `T` with coefficients in a supported
//! ring, and the exact characteristic polynomial of a square matrix.

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::rings::poly::UniPoly;
use crate::rings::rational::Rational;
use crate::rings::{RingDescriptor, RingElement, RingMap};
use std::fmt;

/// Element of `R[T]`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPoly {
    ring: RingDescriptor,
    coeffs: Vec<RingElement>,
}

impl RingPoly {
    pub fn new(ring: RingDescriptor, mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RingPoly { ring, coeffs }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        RingPoly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        RingPoly::constant(RingElement::one(ring))
    }

    pub fn constant(c: RingElement) -> Self {
        RingPoly::new(c.ring().clone(), vec![c])
    }

    /// Lift a rational polynomial to `R[T]` with constant coefficients.
    pub fn from_unipoly(ring: &RingDescriptor, p: &UniPoly) -> Self {
        RingPoly::new(
            ring.clone(),
            p.coeffs()
                .iter()
                .map(|c| RingElement::from_rational(ring, c.clone()))
                .collect(),
        )
    }

    /// The monomial `T`.
    pub fn variable(ring: &RingDescriptor) -> Self {
        RingPoly::new(
            ring.clone(),
            vec![RingElement::zero(ring), RingElement::one(ring)],
        )
    }

    /// The linear factor `T + w` for an integer weight `w`.
    pub fn linear_plus(ring: &RingDescriptor, w: i64) -> Self {
        RingPoly::new(
            ring.clone(),
            vec![RingElement::from_i64(ring, w), RingElement::one(ring)],
        )
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RingElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(&self.ring))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &RingPoly) -> RingPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RingPoly::new(
            self.ring.clone(),
            (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &RingPoly) -> RingPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RingPoly::new(
            self.ring.clone(),
            (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect(),
        )
    }

    pub fn neg(&self) -> RingPoly {
        RingPoly::new(
            self.ring.clone(),
            self.coeffs.iter().map(|c| c.neg()).collect(),
        )
    }

    pub fn mul(&self, other: &RingPoly) -> RingPoly {
        if self.is_zero() || other.is_zero() {
            return RingPoly::zero(&self.ring);
        }
        let mut out =
            vec![RingElement::zero(&self.ring); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        RingPoly::new(self.ring.clone(), out)
    }

    pub fn pow(&self, mut e: u32) -> RingPoly {
        let mut base = self.clone();
        let mut acc = RingPoly::one(&self.ring);
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

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit (in practice monic).
    pub fn div_rem(&self, divisor: &RingPoly) -> Result<(RingPoly, RingPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lc_inv = divisor.coeffs.last().unwrap().inverse()?;
        let mut rem: Vec<RingElement> = self.coeffs.clone();
        let mut quot = vec![RingElement::zero(&self.ring); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().mul(&lc_inv);
            if !c.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(b));
                }
                quot[k] = c;
            }
            rem.pop();
        }
        Ok((
            RingPoly::new(self.ring.clone(), quot),
            RingPoly::new(self.ring.clone(), rem),
        ))
    }

    pub fn exact_div(&self, divisor: &RingPoly) -> Result<RingPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{} does not divide {}",
                divisor, self
            )));
        }
        Ok(q)
    }

    /// Does the monic linear factor `T + w` divide this polynomial?
    pub fn divisible_by_linear(&self, w: i64) -> bool {
        self.eval(&RingElement::from_i64(&self.ring, -w)).is_zero()
    }

    pub fn eval(&self, at: &RingElement) -> RingElement {
        let mut acc = RingElement::zero(&self.ring);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Substitute `T -> T + c`.
    pub fn shift(&self, c: &RingElement) -> RingPoly {
        let step = RingPoly::new(
            self.ring.clone(),
            vec![c.clone(), RingElement::one(&self.ring)],
        );
        let mut acc = RingPoly::zero(&self.ring);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&step).add(&RingPoly::constant(a.clone()));
        }
        acc
    }

    /// Substitute `T -> -T` (flips signs of odd coefficients).
    pub fn reflect(&self) -> RingPoly {
        RingPoly::new(
            self.ring.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// Normalize so the leading coefficient is 1; errors if it is not a unit.
    pub fn monic(&self) -> Result<RingPoly> {
        let lc = self
            .coeffs
            .last()
            .ok_or(Error::DivisionByZero)?;
        let inv = lc.inverse()?;
        Ok(RingPoly::new(
            self.ring.clone(),
            self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
        ))
    }

    /// Evaluate at a square matrix over the same ring (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = Matrix::zero(&self.ring, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            acc = acc.add(&Matrix::identity(&self.ring, n).scale(c));
        }
        acc
    }

    /// Push the coefficients through a ring map.
    pub fn apply_map(&self, m: &RingMap) -> Result<RingPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(m.apply(c)?);
        }
        Ok(RingPoly::new(m.target().clone(), out))
    }

    /// When every coefficient is constant, the underlying rational
    /// polynomial.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.as_rational()?);
        }
        Some(UniPoly::new(coeffs))
    }

    /// The coefficients as polynomials in the ring variable; only over
    /// `Q[x]` (used for vanishing-locus computations).
    pub fn coefficient_polys(&self) -> Vec<UniPoly> {
        self.coeffs.iter().map(|c| c.value().clone()).collect()
    }

    pub fn display_with(&self, op_var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains(' ');
            let body = match k {
                0 => cs.clone(),
                _ => {
                    let tv = if k == 1 {
                        op_var.to_string()
                    } else {
                        format!("{}^{}", op_var, k)
                    };
                    if c.is_one() {
                        tv
                    } else if cs == "-1" {
                        format!("-{}", tv)
                    } else if needs_parens {
                        format!("({})*{}", cs, tv)
                    } else {
                        format!("{}*{}", cs, tv)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(body);
            } else if let Some(rest) = body.strip_prefix('-') {
                parts.push(format!(" - {}", rest));
            } else {
                parts.push(format!(" + {}", body));
            }
        }
        parts.concat()
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("T"))
    }
}

/// Characteristic polynomial `det(T I - A)`, exact, by Faddeev-LeVerrier.
/// Works over any of the supported rings since they contain `Q`.
pub fn char_poly(a: &Matrix) -> Result<RingPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let ring = a.ring().clone();
    let n = a.rows();
    if n == 0 {
        return Ok(RingPoly::one(&ring));
    }
    let trace = |m: &Matrix| -> RingElement {
        let mut t = RingElement::zero(&ring);
        for i in 0..m.rows() {
            t = t.add(m.get(i, i));
        }
        t
    };
    let mut coeffs = vec![RingElement::zero(&ring); n + 1];
    coeffs[n] = RingElement::one(&ring);
    let mut m = a.clone();
    let mut c = trace(&m).neg();
    coeffs[n - 1] = c.clone();
    for k in 2..=n {
        let shifted = {
            let mut s = m.clone();
            for i in 0..n {
                s.set(i, i, s.get(i, i).add(&c));
            }
            s
        };
        m = a.mul(&shifted);
        let inv_k = RingElement::from_rational(&ring, Rational::new(1.into(), k.into()));
        c = trace(&m).mul(&inv_k).neg();
        coeffs[n - k] = c.clone();
    }
    Ok(RingPoly::new(ring, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rational::rat_int;
    use crate::rings::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn qx() -> RingDescriptor {
        RingDescriptor::poly_ring("x")
    }

    #[test]
    fn charpoly_diagonal() {
        // diag(0,0,2) -> T^2 (T-2)
        let a = Matrix::from_i64(&q(), 3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 2]);
        let p = char_poly(&a).unwrap();
        let expect = RingPoly::from_unipoly(&q(), &UniPoly::from_i64_coeffs(&[0, 0, -2, 1]));
        assert_eq!(p, expect);
    }

    #[test]
    fn charpoly_nilpotent() {
        let a = Matrix::from_i64(&q(), 2, 2, &[0, 1, 0, 0]);
        let p = char_poly(&a).unwrap();
        assert_eq!(
            p,
            RingPoly::from_unipoly(&q(), &UniPoly::from_i64_coeffs(&[0, 0, 1]))
        );
    }

    #[test]
    fn charpoly_with_parameter() {
        // [[0,1],[0,x]] -> T^2 - x T
        let ring = qx();
        let x = RingElement::variable(&ring).unwrap();
        let a = Matrix::new(
            ring.clone(),
            2,
            2,
            vec![
                RingElement::zero(&ring),
                RingElement::one(&ring),
                RingElement::zero(&ring),
                x.clone(),
            ],
        )
        .unwrap();
        let p = char_poly(&a).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_monic());
        assert_eq!(p.coeff(1), x.neg());
        assert!(p.coeff(0).is_zero());
        assert_eq!(p.to_string(), "T^2 - x*T");
    }

    #[test]
    fn charpoly_rejects_non_square() {
        let a = Matrix::zero(&q(), 2, 3);
        assert!(char_poly(&a).is_err());
    }

    #[test]
    fn cayley_hamilton() {
        let a = Matrix::from_i64(&q(), 3, 3, &[1, 2, 0, -1, 0, 3, 2, 2, 2]);
        let p = char_poly(&a).unwrap();
        assert!(p.eval_matrix(&a).is_zero());
    }

    #[test]
    fn shift_and_reflect() {
        let ring = q();
        let p = RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[0, 0, 1])); // T^2
        let s = p.shift(&RingElement::from_i64(&ring, 1)); // (T+1)^2
        assert_eq!(
            s,
            RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[1, 2, 1]))
        );
        let r = s.reflect(); // (1-T)^2 = T^2 - 2T + 1
        assert_eq!(
            r,
            RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[1, -2, 1]))
        );
    }

    #[test]
    fn division_by_monic_linear() {
        let ring = q();
        // T^2(T-2) / (T-2)
        let p = RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[0, 0, -2, 1]));
        let d = RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[-2, 1]));
        let q2 = p.exact_div(&d).unwrap();
        assert_eq!(
            q2,
            RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[0, 0, 1]))
        );
        assert!(p.divisible_by_linear(-2));
        assert!(!p.divisible_by_linear(1));
    }

    #[test]
    fn eval_uses_horner() {
        let ring = q();
        let p = RingPoly::from_unipoly(&ring, &UniPoly::from_i64_coeffs(&[1, -3, 2]));
        let v = p.eval(&RingElement::from_i64(&ring, 4));
        assert_eq!(v.as_rational().unwrap(), rat_int(21));
    }
}
