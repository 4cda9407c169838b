//! Exact field arithmetic and sparse linear algebra.

pub mod elim;
pub mod field;
pub mod poly;
pub mod sparse;
pub mod tensor;

use thiserror::Error;

pub use elim::RankKernel;
pub use field::{Field, FieldError, FieldKind, ParseScalarError, Scalar};
pub use poly::Irreducibility;
pub use sparse::{SparseMatrix, SparseVec};
pub use tensor::TensorMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("cannot compose: outer map has domain arity {outer_domain}, inner map has codomain arity {inner_codomain}")]
    ArityMismatch { outer_domain: usize, inner_codomain: usize },
    #[error("base dimensions differ ({left} vs {right})")]
    BaseDimMismatch { left: usize, right: usize },
    #[error("maps are defined over different fields")]
    FieldMismatch,
    #[error("{op}: shapes {left:?} and {right:?} are incompatible")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    EntryOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("multi-index entry {row:?} <- {col:?} invalid for base dimension {base_dim}")]
    MultiIndexOutOfRange { row: Vec<usize>, col: Vec<usize>, base_dim: usize },
    #[error("{0:?} is not a permutation")]
    BadPermutation(Vec<usize>),
}
