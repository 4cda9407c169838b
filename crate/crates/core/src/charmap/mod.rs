//! Module algebras over a Hopf algebra, invariant σ-traces, and the
//! characteristic map `γ: H♮_(δ,σ) → C*(A)` into the cyclic cochains of `A`.
//!
//! Covectors on `A^{⊗k}` are stored as `1 × m^k` matrices and cochain
//! operators act on them by precomposition, so every `A`-side operator is
//! the transpose of a map between tensor powers of `A`.

mod action;
mod gamma;
mod trace;

use thiserror::Error;

use crate::cyclic::CyclicError;
use crate::exactla::LinalgError;
use crate::hopf::HopfError;
use crate::report::Report;

pub use action::{validate_action, ModuleAlgebra};
pub use gamma::{
    characteristic_cochain, characteristic_matrix, verify_characteristic_map, verify_characteristic_map_with,
    CyclicConvention,
};
pub use trace::{is_delta_invariant, is_sigma_trace, sigma_trace_space, TraceCandidate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharmapError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("trace fails the invariance conditions")]
    InvalidTrace(Report),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}
