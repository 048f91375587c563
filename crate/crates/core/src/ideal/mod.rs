//! Generators of the flattening ideals as explicit polynomials, and linear
//! algebra on their spans.

mod generators;
mod poly;
mod span;

pub use generators::{
    minor_generators, minor_generators_with, minor_subsets, pfaffian_generators, pfaffian_generators_with,
    symbolic_flattening, symbolic_skew_form, SymbolicMatrix, MAX_MINOR_SIZE, MAX_PFAFFIAN_SIZE,
};
pub use poly::{export_text, import_text, CoordinateSystem, Monomial, SparsePoly};
pub use span::{in_span, in_span_with, span_dimension, span_dimension_with};
