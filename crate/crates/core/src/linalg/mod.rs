//! Exact linear algebra of finite free modules over the supported rings.

pub mod base_change;
pub mod matrix;
pub mod qmat;
pub mod ringpoly;
pub mod smith;
pub mod split;

pub use matrix::Matrix;
pub use ringpoly::{char_poly, RingPoly};
pub use smith::{
    generic_rank, kernel_and_cokernel, localized_flat_summary, smith_normal_form, FlatSummary,
    KernelCokernel, ModuleSummary, SmithDecomposition,
};
