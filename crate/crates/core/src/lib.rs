//! Exact exterior flattenings of 3-tensors and the secant-variety tools built
//! on them.
//!
//! * [`tensor`]: exact 3-tensors, named examples, seeded samplers, group actions.
//! * [`flatten`]: the exterior flattenings `psi_j` and the `3n x 3n` skew form.
//! * [`matrix`]: fraction-free rank, determinant and Pfaffian; prime-field rank.
//! * [`ideal`]: symbolic minors and Pfaffians, span dimension and membership.
//! * [`rep`]: partitions, Schur dimensions, Littlewood-Richardson and Kronecker
//!   coefficients, and the Schur-module decompositions of the generators.
//! * [`secant`]: kappa vectors, border-rank bounds, membership certificates,
//!   subspace compression, the determinant pencil, inheritance, Terracini.

pub mod error;
pub mod exec;
pub mod flatten;
pub mod ideal;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod secant;
pub mod tensor;

pub use error::{Error, Result};
pub use exec::Exec;
pub use matrix::{ExactMatrix, FpMatrix, RankProfile, SkewProfile};
pub use scalar::{PrimeField, Rational, DEFAULT_PRIME};
pub use tensor::Tensor3;
