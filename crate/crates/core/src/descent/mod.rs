//! Semilinear Γ-actions on 𝔤₀(L), fixed points over K and their
//! verification.

mod action;
mod fixed;
mod group;
mod induced;
mod seven;

use thiserror::Error;

use crate::field_tower::FieldError;
use crate::lie::LieError;

pub use action::{
    action_D4, action_trivial, action_typeA_Z2, action_typeD_Z2, check_alpha, conjugation_by_flip,
    linear_from_matrix_map, Generator, LinearMap, SemilinearAction,
};
pub use fixed::{
    fixed_point_system, fixed_points, is_fixed, k_spans_equal, subspace_equal, verify_descent,
    Construction, FixedSubalgebra,
};
pub use group::{GroupElement, GroupKind};
pub use induced::{induced_fixed_check, trivial_torsor_iso, InducedCase};
pub use seven::{
    flip_matrix, seven_join, seven_join_coords, seven_linear_map, seven_slots, seven_split,
    seven_split_coords, seven_split_matrix, triality_matrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("ineligible parameters: {0}")]
    Ineligible(String),
    #[error("missing tower layer: {0}")]
    MissingLayer(String),
    #[error("{0}")]
    BadGroup(String),
    #[error("subspaces live in different ambient algebras")]
    AmbientMismatch,
    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),
    #[error("the subgroup must act non-trivially on L")]
    TrivialFieldAction,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[cfg(test)]
mod tests;
