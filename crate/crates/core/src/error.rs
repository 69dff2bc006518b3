use thiserror::Error;

/// Errors shared across the library. Violations of de Rham datum axioms are
/// not errors; `datum::validate` returns them as values.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, got {got}")]
    RingMismatch { expected: String, got: String },
    #[error("unsupported ring for this operation: {0}")]
    UnsupportedRing(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("factors are not pairwise coprime: gcd({0}, {1}) is nonconstant")]
    NotCoprime(String, String),
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("ill-typed ring map: {0}")]
    IllTypedMap(String),
    #[error("invalid ring map: {0}")]
    InvalidMap(String),
    #[error("operator does not satisfy the annihilating polynomial: P(phi) != 0")]
    NotAnnihilated,
    #[error("unit hypothesis fails: {0} is not a unit")]
    UnitHypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("window must satisfy k < l, got k={k}, l={l}")]
    EmptyWindow { k: i64, l: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
