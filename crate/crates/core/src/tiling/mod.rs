//! Brute-force ground truth: tiling enumeration on the triangular lattice and
//! nonintersecting lattice path families for the half regions.

pub mod enumerate;
pub mod factorization;
pub mod grid;
pub mod paths;

pub use enumerate::{
    count_with_fixed_axis, count_with_fixed_rhombus, default_budget, dump_tilings,
    enumerate_tilings, DEFAULT_BUDGET,
};
pub use factorization::{factorization_check, factorized_count};
pub use grid::{Cell, Orientation, Region};
pub use paths::{simple_half_count, weighted_half_count};
