//! The cocyclic module `H♮_(δ,σ)` of a Hopf algebra with a modular pair in
//! involution, and its cyclic cohomology.
//!
//! Level `n ≥ 1` is `H^{⊗n}`; level `0` is the ground field with
//! `δ₀(1) = 1_H`, `δ₁(1) = σ`, `σ₀ = ε` and `τ₀ = id`.

mod bicomplex;
mod module;
mod verify;

use thiserror::Error;

use crate::exactla::LinalgError;
use crate::report::Report;

pub use bicomplex::{Bicomplex, CohomologyRow, CohomologyTable};
pub use module::CocyclicModule;
pub use verify::verify_cocyclic;

/// Default bound on `dim H^{⊗n}` for any materialized level.
pub const DEFAULT_MAX_SPACE: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("modular pair is not in involution")]
    NotInInvolution(Report),
    #[error("level {level} has dimension {dim}, above the cap {cap}")]
    LevelCap { level: usize, dim: usize, cap: usize },
    #[error("{op} index {index} out of range at level {level}")]
    IndexOutOfRange { op: &'static str, level: usize, index: usize },
    #[error("bicomplex identity {identity} fails at level {level}")]
    BicomplexIdentity { identity: &'static str, level: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
