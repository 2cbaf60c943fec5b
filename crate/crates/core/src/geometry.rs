//! Levi-Civita connection and curvature of a left-invariant metric, computed
//! entirely in the left-invariant frame where every `Z⟨X,Y⟩` term vanishes.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::lie::{AlgebraVector, LieAlgebra};
use crate::metric::PseudoMetric;

/// Curvature operator convention used throughout:
/// `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z`, `Ric(Y,Z) = tr(X ↦ R(X,Y)Z)`,
/// `scal = Σ g^{ij} Ric_ij`. With this sign the hyperbolic plane (affine
/// algebra, Euclidean metric) has `scal = -2`.
pub const CURVATURE_CONVENTION: &str =
    "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z; Ric(Y,Z) = tr(X -> R(X,Y)Z); scal = g^ij Ric_ij";

/// `Γ(i, j) = ∇_{e_i} e_j` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionCoeffs {
    dim: usize,
    table: Vec<AlgebraVector>,
}

impl ConnectionCoeffs {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraVector {
        &self.table[i * self.dim + j]
    }

    /// `∇_X Y` for left-invariant `X`, `Y`.
    pub fn covariant(&self, x: &[Rational], y: &[Rational]) -> AlgebraVector {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, g) in out.iter_mut().zip(self.get(i, j)) {
                    if !g.is_zero() {
                        *o += &c * g;
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    dim: usize,
    riemann: Vec<AlgebraVector>,
    pub ricci: Matrix,
    pub scalar: Rational,
}

impl CurvatureReport {
    /// Coordinates of `R(e_i, e_j) e_k`.
    pub fn riemann(&self, i: usize, j: usize, k: usize) -> &AlgebraVector {
        &self.riemann[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Serializable summary of the curvature of one instance.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSummary {
    pub convention: &'static str,
    #[serde(with = "crate::exact::serde_rational")]
    pub scalar: Rational,
    pub ricci: Vec<Vec<String>>,
}

fn check_dims(g: &LieAlgebra, m: &PseudoMetric) -> Result<()> {
    if g.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: m.dim(),
        });
    }
    Ok(())
}

/// Koszul formula for left-invariant fields:
/// `⟨∇_{e_i}e_j, e_k⟩ = ½(⟨[e_i,e_j],e_k⟩ − ⟨[e_j,e_k],e_i⟩ + ⟨[e_k,e_i],e_j⟩)`.
#[allow(clippy::needless_range_loop)]
pub fn levi_civita(g: &LieAlgebra, m: &PseudoMetric) -> Result<ConnectionCoeffs> {
    check_dims(g, m)?;
    let n = g.dim();
    let half = crate::exact::rat(1, 2);
    // lowered[i][j][k] = ⟨[e_i,e_j], e_k⟩
    let lowered: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.lower(&g.bracket_basis(i, j)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let w: Vec<Rational> = (0..n)
                .map(|k| &half * (&lowered[i][j][k] - &lowered[j][k][i] + &lowered[k][i][j]))
                .collect();
            table.push(m.raise(&w)?);
        }
    }
    Ok(ConnectionCoeffs { dim: n, table })
}

pub fn curvature(g: &LieAlgebra, m: &PseudoMetric) -> Result<CurvatureReport> {
    let conn = levi_civita(g, m)?;
    Ok(curvature_from_connection(g, m, &conn))
}

pub fn curvature_from_connection(
    g: &LieAlgebra,
    m: &PseudoMetric,
    conn: &ConnectionCoeffs,
) -> CurvatureReport {
    let n = g.dim();
    let e = |i: usize| crate::lie::unit(n, i);
    let mut riemann: Vec<AlgebraVector> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let bij = g.bracket_basis(i, j);
            for k in 0..n {
                let a = conn.covariant(&e(i), conn.get(j, k));
                let b = conn.covariant(&e(j), conn.get(i, k));
                let c = conn.covariant(&bij, &e(k));
                riemann.push(
                    a.iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((a, b), c)| a - b - c)
                        .collect(),
                );
            }
        }
    }
    let mut ricci = Matrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            // Ric(e_j, e_k) = Σ_i [R(e_i, e_j) e_k]^i
            ricci[(j, k)] = (0..n)
                .map(|i| riemann[(i * n + j) * n + k][i].clone())
                .sum();
        }
    }
    let ginv = m.gram_inverse();
    let mut scalar = Rational::zero();
    for j in 0..n {
        for k in 0..n {
            if !ginv[(j, k)].is_zero() {
                scalar += &ginv[(j, k)] * &ricci[(j, k)];
            }
        }
    }
    CurvatureReport {
        dim: n,
        riemann,
        ricci,
        scalar,
    }
}

pub fn scalar_curvature(g: &LieAlgebra, m: &PseudoMetric) -> Result<Rational> {
    Ok(curvature(g, m)?.scalar)
}

impl CurvatureReport {
    pub fn summary(&self) -> CurvatureSummary {
        CurvatureSummary {
            convention: CURVATURE_CONVENTION,
            scalar: self.scalar.clone(),
            ricci: self.ricci.to_rows().iter().map(|r| crate::exact::format_vec(r)).collect(),
        }
    }
}
