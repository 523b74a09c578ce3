//! Simple Lie algebras by structure constants, brackets over a tower, and
//! derivations X ↦ ∂X + [D, X].

mod algebra;
mod element;

use thiserror::Error;

use crate::field_tower::FieldError;

pub use algebra::{jacobi_check, make_sl, make_so, AlgebraKind, DLieAlgebra, MatrixEntry};
pub use element::{
    adjoint_matrix, derive_element, leibniz_check, quasi_iso_verify, DerivationOp, LieElement,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("{what} needs size at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("matrix is not in the algebra: {0}")]
    NotInAlgebra(String),
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Field(#[from] FieldError),
}
