//! Exact arithmetic in K = k(t), k = ℚ(ω), and radical towers over it.

mod automorphism;
mod modp;
mod noncube;
mod parse;
mod poly;
mod powers;
mod ratfunc;
mod s3;
mod scalar;
mod tower;

use thiserror::Error;

pub use automorphism::{quadratic_norm, AutomorphismKind, FieldAutomorphism};
pub use noncube::{
    cube_root_in_quadratic_field, noncube_certify, NonCubeCertificate, NonCubeVerdict,
    QuadraticNumber, DEFAULT_SPECIALIZATION_LIMIT,
};
pub use parse::{parse_element, parse_expr, parse_ratfunc, Expr, ParseError};
pub use poly::Poly;
pub use powers::{geometric_cube_root, is_square_geometric, CubeWitness};
pub use ratfunc::RatFunc;
pub use s3::{check_s3_extension, S3Report};
pub use scalar::ConstScalar;
pub(crate) use tower::same_tower;
pub use tower::{Monomial, TowerElement, TowerSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different towers")]
    TowerMismatch,
    #[error("automorphism `{name}` is not defined: {reason}")]
    UndefinedAutomorphism { name: String, reason: String },
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("malformed tower: {0}")]
    MalformedTower(String),
    #[error("not a field: {0}")]
    NotAField(String),
}
