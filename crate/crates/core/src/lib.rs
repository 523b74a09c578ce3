//! Exact construction and verification of twisted forms of differential
//! Lie algebras over K = ℚ(ω)(t).
//!
//! [`field_tower`] does the arithmetic in radical towers over K, [`lie`]
//! the Lie algebras over them, [`descent`] the semilinear actions and their
//! fixed points, and [`forms`] the explicit bases compared against them.

pub mod descent;
pub mod export;
pub mod field_tower;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod sample;

pub use field_tower::*;
