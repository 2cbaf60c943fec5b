//! Left-invariant Yamabe solitons `(R − λ) g = ½ 𝔏_X g`.
//!
//! When `X` is conformal with factor `ρ`, the soliton constant is pinned to
//! `λ = R − ρ`, and the soliton is trivial exactly when `X` is Killing.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::conformal::{conformal_residual, lie_derivative_metric};
use crate::error::{Error, Result};
use crate::exact::{format_vec, rat, Matrix, Rational};
use crate::geometry::scalar_curvature;
use crate::lie::LieAlgebra;
use crate::metric::PseudoMetric;
use crate::verify::{Check, Verdict, VerdictReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
}

impl SolitonClass {
    pub fn of(lambda: &Rational) -> Self {
        if lambda.is_zero() {
            SolitonClass::Steady
        } else if lambda.is_positive() {
            SolitonClass::Shrinking
        } else {
            SolitonClass::Expanding
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolitonReport {
    pub field: Vec<String>,
    #[serde(with = "crate::exact::serde_rational")]
    pub lambda: Rational,
    #[serde(with = "crate::exact::serde_rational")]
    pub rho: Rational,
    #[serde(with = "crate::exact::serde_rational")]
    pub scalar: Rational,
    pub class: SolitonClass,
    pub trivial: bool,
}

/// True iff `(R − λ)·g = ½·𝔏_X g` entry-wise.
pub fn check_soliton(
    g: &LieAlgebra,
    m: &PseudoMetric,
    x: &[Rational],
    lambda: &Rational,
) -> Result<bool> {
    let scalar = scalar_curvature(g, m)?;
    check_soliton_with_scalar(g, m, &scalar, x, lambda)
}

pub fn check_soliton_with_scalar(
    g: &LieAlgebra,
    m: &PseudoMetric,
    scalar: &Rational,
    x: &[Rational],
    lambda: &Rational,
) -> Result<bool> {
    let lhs = m.gram().scale(&(scalar - lambda));
    let rhs = lie_derivative_metric(g, m, x)?.scale(&rat(1, 2));
    Ok(lhs == rhs)
}

pub fn soliton_from_conformal(
    g: &LieAlgebra,
    m: &PseudoMetric,
    x: &[Rational],
    rho: &Rational,
) -> Result<SolitonReport> {
    let scalar = scalar_curvature(g, m)?;
    soliton_with_scalar(g, m, &scalar, x, rho)
}

/// As [`soliton_from_conformal`] with the scalar curvature supplied by the caller.
pub fn soliton_with_scalar(
    g: &LieAlgebra,
    m: &PseudoMetric,
    scalar: &Rational,
    x: &[Rational],
    rho: &Rational,
) -> Result<SolitonReport> {
    let residual = conformal_residual(g, m, x, rho)?;
    if let Some((i, j)) = first_nonzero(&residual) {
        return Err(Error::NotAConformalSolution {
            i: i + 1,
            j: j + 1,
            value: residual[(i, j)].clone(),
        });
    }
    let lambda = scalar - rho;
    Ok(SolitonReport {
        field: format_vec(x),
        class: SolitonClass::of(&lambda),
        trivial: rho.is_zero(),
        lambda,
        rho: rho.clone(),
        scalar: scalar.clone(),
    })
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m[(i, j)].is_zero())
}

/// Soliton system in unknowns `(x_1, …, x_n, μ)` with `μ = R − λ`:
/// `½(𝔏_X g)(e_i,e_j) − μ g_ij = 0`, assembled directly from brackets.
pub fn soliton_system(g: &LieAlgebra, m: &PseudoMetric) -> Result<Matrix> {
    if g.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: m.dim(),
        });
    }
    let n = g.dim();
    let half = rat(1, 2);
    let e = |i: usize| crate::lie::unit(n, i);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = Vec::with_capacity(n + 1);
            for l in 0..n {
                let a = m.inner(&g.bracket_basis(l, i), &e(j))?;
                let b = m.inner(&e(i), &g.bracket_basis(l, j))?;
                row.push(-(&half * (a + b)));
            }
            row.push(-m.g(i, j).clone());
            rows.push(row);
        }
    }
    Matrix::from_rows(rows)
}

/// On unimodular algebras every left-invariant Yamabe soliton has `λ = R`.
pub fn verify_corollary_unimodular(g: &LieAlgebra, m: &PseudoMetric) -> Result<VerdictReport> {
    let check = Check::Corollary;
    if !g.is_unimodular() {
        return Ok(VerdictReport {
            check,
            verdict: Verdict::HypothesisNotMet {
                reason: "algebra is not unimodular".into(),
            },
            details: Vec::new(),
        });
    }
    let n = g.dim();
    let scalar = scalar_curvature(g, m)?;
    let solutions = soliton_system(g, m)?.kernel();
    for v in solutions.basis() {
        let mu = &v[n];
        let x = &v[..n];
        if !mu.is_zero() || !check_soliton_with_scalar(g, m, &scalar, x, &scalar)? {
            return Ok(VerdictReport {
                check,
                verdict: Verdict::TheoremViolated {
                    reason: format!("soliton with lambda = R - ({mu}) != R"),
                    counterexample: Some(format_vec(v)),
                },
                details: Vec::new(),
            });
        }
    }
    Ok(VerdictReport {
        check,
        verdict: Verdict::Pass,
        details: vec![format!(
            "{} soliton fields, all with lambda = R = {scalar}",
            solutions.dim()
        )],
    })
}
