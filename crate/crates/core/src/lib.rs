//! Exact computation of left-invariant conformal and Killing vector fields,
//! curvature, and Yamabe solitons on Lie groups with left-invariant
//! pseudo-Riemannian metrics.
//!
//! A Lie algebra is given by rational structure constants and the metric by a
//! rational Gram matrix; every result is exact.

pub mod catalog;
pub mod cli;
pub mod conformal;
pub mod document;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod lie;
pub mod metric;
pub mod random;
pub mod report;
pub mod verify;
pub mod yamabe;

pub use error::{Error, Result};
