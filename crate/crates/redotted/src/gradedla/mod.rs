//! Graded linear algebra over an exact field: dense and sparse elimination,
//! truncated graded spaces and maps, and Laurent-polynomial graded dimensions.

pub mod laurent;
pub mod matrix;
pub mod space;
pub mod sparse;

pub use laurent::{inverse_power_series, Laurent, RationalGdim};
pub use matrix::{Matrix, Solution};
pub use space::{graded_dimension, GradedMap, GradedSpace, Homology};
pub use sparse::{
    kernel_of_columns, rank_of, sparse_axpy, sparse_from_pairs, SpanBuilder, SparseVec,
};
