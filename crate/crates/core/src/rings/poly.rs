//! Dense univariate polynomials over the rationals, lowest degree first.
//!
//! The zero polynomial is the empty coefficient vector; a nonzero polynomial
//! never has a trailing zero coefficient. `Q[x]` is Euclidean with the degree
//! norm, and everything here (division, gcd, Bezout, resultants) is exact.

use crate::error::{Error, Result};
use crate::rings::rational::{rat_int, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn constant_i64(c: i64) -> Self {
        UniPoly::constant(rat_int(c))
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn variable() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// The monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = UniPoly::one();
        for r in roots {
            p = &p * &UniPoly::new(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide by the leading coefficient. Panics on zero.
    pub fn monic(&self) -> Self {
        let lc = self.leading_coeff().expect("monic of zero polynomial");
        self.scale(&lc.recip())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitute `x -> x + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        let step = UniPoly::new(vec![c.clone(), Rational::one()]);
        let mut acc = UniPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &UniPoly::constant(a.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            if !c.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k + i] -= t;
                }
                quot[k] = c;
            }
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{} does not divide {}",
                divisor, self
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map_or(false, |(_, r)| r.is_zero())
    }

    /// Monic gcd. `gcd(0, 0)` is an error.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        Ok(self.gcd_bezout(other)?.0)
    }

    /// Extended Euclid: returns `(g, u, v)` with `g = u*self + v*other`,
    /// `g` monic and dividing both inputs.
    pub fn gcd_bezout(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut v0) = (UniPoly::one(), UniPoly::zero());
        let (mut u1, mut v1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            v0 = v1;
            u1 = u;
            v1 = v;
        }
        // normalize monic
        let lc = r0.leading_coeff().unwrap().recip();
        Ok((r0.scale(&lc), u0.scale(&lc), v0.scale(&lc)))
    }

    /// Largest square-free divisor, monic.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_constant() {
            return Ok(UniPoly::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// Resultant of two polynomials, via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &UniPoly) -> Rational {
        fn go(a: &UniPoly, b: &UniPoly) -> Rational {
            if b.is_zero() {
                return if a.degree() == Some(0) {
                    Rational::one()
                } else {
                    Rational::zero()
                };
            }
            if b.is_constant() {
                let db = a.degree().unwrap_or(0) as u32;
                let mut acc = Rational::one();
                let c = b.coeff(0);
                for _ in 0..db {
                    acc *= c.clone();
                }
                return acc;
            }
            let da = a.degree().unwrap_or(0);
            let db = b.degree().unwrap();
            let (_, r) = a.div_rem(b).expect("nonzero divisor");
            let dr = r.degree().map_or(0, |d| d);
            let lb = b.leading_coeff().unwrap();
            let mut lead = Rational::one();
            let e = (da as i64) - (dr as i64);
            for _ in 0..e {
                lead *= lb.clone();
            }
            let sign = if (da * db) % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            if r.is_zero() {
                // deg r treated as -inf: resultant is 0 unless deg a == deg b == 0
                return Rational::zero();
            }
            sign * lead * go(b, &r)
        }
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        if self.is_constant() {
            let mut acc = Rational::one();
            for _ in 0..other.degree().unwrap_or(0) {
                acc *= self.coeff(0);
            }
            return acc;
        }
        go(self, other)
    }

    /// Multiply through by the lcm of denominators and divide by the gcd of
    /// numerators: a primitive integer polynomial with the same roots, with
    /// positive leading coefficient. Returns the coefficient list.
    pub fn primitive_integer_coeffs(&self) -> Vec<num_bigint::BigInt> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let mut out: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        if out.last().unwrap().is_negative() {
            for c in &mut out {
                *c = -(c.clone());
            }
        }
        out
    }

    /// Render with a custom variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match k {
                0 => format!("{}", mag),
                _ => {
                    let v = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{}^{}", var, k)
                    };
                    if mag.is_one() {
                        v
                    } else {
                        format!("{}*{}", mag, v)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", term)
                } else {
                    term
                });
            } else {
                parts.push(format!(
                    " {} {}",
                    if c.is_negative() { "-" } else { "+" },
                    term
                ));
            }
        }
        parts.concat()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Substitute `x -> x + c`; the operation named `poly_shift` in the API.
pub fn poly_shift(p: &UniPoly, c: &Rational) -> UniPoly {
    p.shift(c)
}

/// The unique polynomial of degree < #points through the given points
/// (distinct abscissas required).
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &UniPoly::new(vec![-xj.clone(), Rational::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// Extended gcd with monic normalization; `poly_gcd_bezout` in the API.
pub fn poly_gcd_bezout(a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
    a.gcd_bezout(b)
}
