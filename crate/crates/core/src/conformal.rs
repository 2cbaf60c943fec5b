//! Left-invariant conformal vector fields.
//!
//! For left-invariant `X` and a left-invariant metric the conformal equation
//! `𝔏_X⟨·,·⟩ = 2ρ⟨·,·⟩` is linear in `(x_1, …, x_n, ρ)` jointly, so the
//! complete solution set is a single kernel in dimension `n + 1`. Killing
//! fields are the solutions with `ρ = 0`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Rational, Subspace};
use crate::lie::{unit, AlgebraVector, LieAlgebra};
use crate::metric::PseudoMetric;

fn check_dims(g: &LieAlgebra, m: &PseudoMetric) -> Result<()> {
    if g.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: m.dim(),
        });
    }
    Ok(())
}

/// `(𝔏_X g)(e_i, e_j) = −⟨[X,e_i],e_j⟩ − ⟨e_i,[X,e_j]⟩`; the derivative term
/// `X⟨e_i,e_j⟩` vanishes for left-invariant data.
pub fn lie_derivative_metric(g: &LieAlgebra, m: &PseudoMetric, x: &[Rational]) -> Result<Matrix> {
    check_dims(g, m)?;
    let n = g.dim();
    let ad = g.ad_matrix(x)?;
    let mut out = Matrix::zeros(n, n);
    // lowered[i][j] = ⟨[X,e_i], e_j⟩
    let lowered: Vec<Vec<Rational>> = (0..n)
        .map(|i| m.lower(&ad.column(i)))
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in i..n {
            let v = -(&lowered[i][j] + &lowered[j][i]);
            out[(i, j)] = v.clone();
            out[(j, i)] = v;
        }
    }
    Ok(out)
}

/// `𝔏_X g − 2ρ g`; zero exactly when `(x, ρ)` is a conformal solution.
pub fn conformal_residual(
    g: &LieAlgebra,
    m: &PseudoMetric,
    x: &[Rational],
    rho: &Rational,
) -> Result<Matrix> {
    let l = lie_derivative_metric(g, m, x)?;
    l.sub(&m.gram().scale(&(int(2) * rho)))
}

/// One row per unordered pair `i ≤ j`, columns `(x_1, …, x_n, ρ)`:
/// `Σ_l x_l (−⟨[e_l,e_i],e_j⟩ − ⟨e_i,[e_l,e_j]⟩) − 2ρ⟨e_i,e_j⟩ = 0`.
pub fn conformal_system(g: &LieAlgebra, m: &PseudoMetric) -> Result<Matrix> {
    check_dims(g, m)?;
    let n = g.dim();
    let per_basis: Vec<Matrix> = (0..n)
        .map(|l| lie_derivative_metric(g, m, &unit(n, l)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let mut row: Vec<Rational> = per_basis.iter().map(|d| d[(i, j)].clone()).collect();
            row.push(-(int(2) * m.g(i, j)));
            rows.push(row);
        }
    }
    Matrix::from_rows(rows)
}

/// Solution space of the conformal equation in `(x_1, …, x_n, ρ)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalSolutionSpace {
    algebra_dim: usize,
    space: Subspace,
}

impl ConformalSolutionSpace {
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Splits an `(x, ρ)` vector.
    pub fn split(v: &[Rational]) -> (&[Rational], &Rational) {
        let (x, rho) = v.split_at(v.len() - 1);
        (x, &rho[0])
    }

    /// `(x, ρ)` pairs for each canonical basis vector.
    pub fn solutions(&self) -> impl Iterator<Item = (&[Rational], &Rational)> {
        self.space.basis().iter().map(|v| Self::split(v))
    }

    /// ρ-coordinates of the basis vectors.
    pub fn rho_form(&self) -> Vec<Rational> {
        self.space
            .basis()
            .iter()
            .map(|v| v[self.algebra_dim].clone())
            .collect()
    }

    /// Intersection with the hyperplane `ρ = 0`, projected to `x`.
    pub fn killing_space(&self) -> Subspace {
        let n = self.algebra_dim;
        if self.space.is_zero() {
            return Subspace::zero(n);
        }
        let rho = Matrix::from_rows(vec![self.rho_form()]).expect("single row");
        let coeffs = rho.kernel();
        let vectors = coeffs
            .basis()
            .iter()
            .map(|c| {
                let mut v = self.space.combine(c);
                v.truncate(n);
                v
            })
            .collect();
        Subspace::span(n, vectors)
    }

    /// Structural test: some solution has `ρ ≠ 0`.
    pub fn nonkilling_exists(&self) -> bool {
        self.rho_form().iter().any(|r| !r.is_zero())
    }

    /// Projection of the space to `x`-coordinates (all conformal fields).
    pub fn conformal_fields(&self) -> Subspace {
        let n = self.algebra_dim;
        Subspace::span(
            n,
            self.space
                .basis()
                .iter()
                .map(|v| v[..n].to_vec())
                .collect(),
        )
    }

    /// The `ρ` paired with `x`, if `x` is a conformal field. Unique because a
    /// nonzero `ρ` with `x = 0` would force `g = 0`.
    pub fn rho_for(&self, x: &[Rational]) -> Option<Rational> {
        let n = self.algebra_dim;
        if x.len() != n {
            return None;
        }
        if self.space.is_zero() {
            return x.iter().all(Zero::is_zero).then(Rational::zero);
        }
        // Solve x = Σ c_k b_k[..n] for the basis coefficients c.
        let bt = self.space.basis_matrix().transpose();
        let aug_rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = bt.row(i).to_vec();
                r.push(x[i].clone());
                r
            })
            .collect();
        let aug = Matrix::from_rows(aug_rows).ok()?;
        let (r, pivots) = aug.rref();
        let k = self.space.dim();
        if pivots.last() == Some(&k) {
            return None;
        }
        let mut c = vec![Rational::zero(); k];
        for (row, &p) in pivots.iter().enumerate() {
            c[p] = r[(row, k)].clone();
        }
        let v = self.space.combine(&c);
        Some(v[n].clone())
    }
}

/// Kernel of [`conformal_system`].
pub fn conformal_space(g: &LieAlgebra, m: &PseudoMetric) -> Result<ConformalSolutionSpace> {
    let sys = conformal_system(g, m)?;
    Ok(ConformalSolutionSpace {
        algebra_dim: g.dim(),
        space: sys.kernel(),
    })
}

pub fn killing_space(c: &ConformalSolutionSpace) -> Subspace {
    c.killing_space()
}

pub fn nonkilling_exists(c: &ConformalSolutionSpace) -> bool {
    c.nonkilling_exists()
}

/// `−nρ`, `tr(ad_X)`, and `Σ_i ⟨ad_X f_i, f_i⟩ / ⟨f_i, f_i⟩` over an orthogonal
/// basis `f_i` of the metric. For a conformal solution all three agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceIdentity {
    pub minus_n_rho: Rational,
    pub trace_ad: Rational,
    pub orthogonal_sum: Rational,
}

impl TraceIdentity {
    pub fn holds(&self) -> bool {
        self.minus_n_rho == self.trace_ad && self.trace_ad == self.orthogonal_sum
    }
}

pub fn trace_identity(
    g: &LieAlgebra,
    m: &PseudoMetric,
    x: &[Rational],
    rho: &Rational,
) -> Result<TraceIdentity> {
    check_dims(g, m)?;
    let n = g.dim();
    let ad = g.ad_matrix(x)?;
    let (s, d) = m.gram().congruence_diagonalize()?;
    let mut orthogonal_sum = Rational::zero();
    for (i, di) in d.iter().enumerate() {
        let f = s.column(i);
        let af = ad.mul_vec(&f)?;
        orthogonal_sum += m.inner(&af, &f)? / di;
    }
    Ok(TraceIdentity {
        minus_n_rho: -(int(n as i64) * rho),
        trace_ad: ad.trace(),
        orthogonal_sum,
    })
}

/// Representative `x` of a non-Killing solution (any basis vector with `ρ ≠ 0`).
pub fn nonkilling_representative(c: &ConformalSolutionSpace) -> Option<(AlgebraVector, Rational)> {
    c.solutions()
        .find(|(_, rho)| !rho.is_zero())
        .map(|(x, rho)| (x.to_vec(), rho.clone()))
}
