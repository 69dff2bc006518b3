//! Exact computational algebra for period dimensions of operator towers.
//!
//! The coefficient rings are the rationals `Q`, the polynomial ring `Q[x]`
//! and its quotients `Q[x]/(f)`, all with exact big-integer arithmetic.
//! On top of that sit Smith normal forms, operator splittings, the de Rham
//! datum calculus, truncated tower cohomology and the stratification of the
//! affine line by period dimensions.

pub mod datum;
pub mod error;
pub mod family;
pub mod linalg;
pub mod rings;
pub mod strata;

pub use error::Error;
pub use rings::poly::UniPoly;
pub use rings::rational::Rational;
pub use rings::{RingDescriptor, RingElement, RingMap};
