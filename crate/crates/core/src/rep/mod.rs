//! Partitions, Schur-module dimensions, Littlewood-Richardson and Kronecker
//! coefficients, and the decompositions of the flattening ideals.

mod characters;
mod decompose;
mod lr;
mod partition;

pub use characters::{class_size, kronecker_coefficient, sn_character, CharacterTable, MAX_SYMMETRIC_DEGREE};
pub use decompose::{
    decompose_kappa0, decompose_kappa1_nonsym_bound, decompose_kappa1_sym, total_dimension, SchurModuleSummand,
};
pub use lr::lr_coefficient;
pub use partition::{partitions, partitions_bounded, schur_dim, Partition};
