//! Concrete Hopf algebras, modular pairs, R-matrices and module algebras.

mod groups;
mod module_algebras;
mod taft;

use thiserror::Error;

use crate::charmap::CharmapError;
use crate::exactla::LinalgError;
use crate::hopf::HopfError;

pub use groups::{function_algebra, function_algebra_via_dual, group_algebra, trivial, GroupPresentation};
pub use module_algebras::{
    broken_translation_module, conjugation_module, evaluation_trace, haar_trace, translation_module,
    ModuleAlgebraExample,
};
pub use taft::{sweedler_h4, taft, taft_cyclotomic, SweedlerH4, TaftAlgebra, TaftPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid Cayley table: {0}")]
    InvalidGroup(String),
    #[error("field has no primitive {0}-th root of unity at the given element")]
    NoPrimitiveRoot(usize),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    ModuleAlgebra(#[from] CharmapError),
}
