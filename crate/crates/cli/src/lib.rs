//! Command-line front end: family-file ingestion, analysis and report
//! commands, theorem-verification suites, and seeded family generation.

pub mod commands;
pub mod corpus;
pub mod expr;
pub mod file;
pub mod literal;
pub mod random;
pub mod verify;

/// Resolve the effective seed: the environment variable takes precedence
/// over the flag; the default is 0.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    if let Ok(v) = std::env::var("PERIOD_STRATA_SEED") {
        if let Ok(n) = v.parse() {
            return n;
        }
    }
    flag.unwrap_or(0)
}
