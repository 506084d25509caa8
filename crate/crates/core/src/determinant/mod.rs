//! Exact construction and evaluation of the determinants behind the counts.

pub mod blocks;
pub mod kratt;
pub mod matrices;
pub mod reconstruct;

pub use blocks::{verify_block_decomposition, BlockCheck, BlockDecomposition};
pub use kratt::{krattenthaler_det, krattenthaler_matrix, KrattLemmaInput};
pub use matrices::{
    build_complex_matrix, build_d, build_simple_matrix, ParamMatrixSpec, Variant,
};
pub use reconstruct::{p_from_block_values, reconstruct_detd_polynomial, reconstruct_p};
