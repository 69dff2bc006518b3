//! Exact rational scalars.
//!
//! `Rational` is `num`'s big-integer ratio type: always reduced, denominator
//! positive. Its `Display`/`FromStr` already use the `p/q` (or bare `p`)
//! form, which is the serialization this crate uses everywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer value of a rational, if it is an integer.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// The integer value as `i64`, when it fits.
pub fn as_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    as_integer(r).and_then(|n| n.to_i64())
}

/// Height of a rational: max of |numerator| and denominator. Used for
/// coefficient-size heuristics.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().abs();
    if n > d {
        n
    } else {
        d
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
