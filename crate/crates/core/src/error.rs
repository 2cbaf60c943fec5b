use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("metric is degenerate (determinant is zero)")]
    Degenerate,

    /// Indices are 1-based, as in the external formats.
    #[error("Jacobi identity fails for (e{i}, e{j}, e{k}); residual {}", fmt_vec(.residual))]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Rational>,
    },

    #[error("structure table entry [e{i}, e{j}] is invalid: {reason}")]
    InvalidStructure { i: usize, j: usize, reason: String },

    #[error("vector is not a conformal solution; residual entry ({i}, {j}) is {value}")]
    NotAConformalSolution { i: usize, j: usize, value: Rational },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("parameter `{param}` violates constraint: {constraint}")]
    ConstraintViolated { param: String, constraint: String },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(", "))
}
