//! Lie algebras presented by structure constants on a fixed basis.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow from
//! antisymmetry, so the Jacobi identity is the only thing validation can reject.
//! Indices are 0-based here and 1-based in every external format.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_zero_vec, Matrix, Rational, Subspace};

/// Coordinates `(x_1, …, x_n)` of `X = Σ x_i e_i`.
pub type AlgebraVector = Vec<Rational>;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Unvalidated bracket table: input to [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl StructureTable {
    pub fn new(dim: usize) -> Self {
        let pairs = dim * dim.saturating_sub(1) / 2;
        Self {
            dim,
            entries: vec![vec![Rational::zero(); dim]; pairs],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j] = Σ coeffs[k] e_k`. When `i > j` the negation is stored
    /// under `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, coeffs: Vec<Rational>) -> Result<&mut Self> {
        let n = self.dim;
        let invalid = |reason: String| Error::InvalidStructure {
            i: i + 1,
            j: j + 1,
            reason,
        };
        if i >= n || j >= n {
            return Err(invalid(format!("index out of range 1..={n}")));
        }
        if i == j {
            return Err(invalid("a basis vector brackets to zero with itself".into()));
        }
        if coeffs.len() != n {
            return Err(invalid(format!(
                "coefficient vector has length {}, expected {n}",
                coeffs.len()
            )));
        }
        if i < j {
            self.entries[pair_index(n, i, j)] = coeffs;
        } else {
            self.entries[pair_index(n, j, i)] = coeffs.into_iter().map(|c| -c).collect();
        }
        Ok(self)
    }

    /// `[e_i, e_j] = c · e_k`
    pub fn set_single(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<&mut Self> {
        let mut v = vec![Rational::zero(); self.dim];
        if k >= self.dim {
            return Err(Error::InvalidStructure {
                i: i + 1,
                j: j + 1,
                reason: format!("target index {} out of range", k + 1),
            });
        }
        v[k] = c;
        self.set(i, j, v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<Rational>>,
}

impl LieAlgebra {
    /// Checks the Jacobi identity on every triple `i < j < k`.
    pub fn validate(table: StructureTable) -> Result<Self> {
        let g = Self {
            dim: table.dim,
            table: table.entries,
        };
        let n = g.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = g.jacobi_residual(i, j, k);
                    if !is_zero_vec(&residual) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            residual,
                        });
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::validate(StructureTable::new(dim)).expect("abelian algebra satisfies Jacobi")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> AlgebraVector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.table[pair_index(self.dim, i, j)].clone(),
            Greater => self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(|c| -c)
                .collect(),
            Equal => vec![Rational::zero(); self.dim],
        }
    }

    /// Nonzero table entries `(i, j, [e_i, e_j])` with `i < j`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.table[pair_index(n, i, j)].as_slice()))
            .filter(|(_, _, v)| !is_zero_vec(v))
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<AlgebraVector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> AlgebraVector {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                // x_i y_j [e_i,e_j] + x_j y_i [e_j,e_i]
                let c = &x[i] * &y[j] - &x[j] * &y[i];
                if c.is_zero() {
                    continue;
                }
                for (o, t) in out.iter_mut().zip(&self.table[pair_index(n, i, j)]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> AlgebraVector {
        let e = |a: usize| unit(self.dim, a);
        let t1 = self.bracket_unchecked(&self.bracket_basis(i, j), &e(k));
        let t2 = self.bracket_unchecked(&self.bracket_basis(j, k), &e(i));
        let t3 = self.bracket_unchecked(&self.bracket_basis(k, i), &e(j));
        t1.iter().zip(&t2).zip(&t3).map(|((a, b), c)| a + b + c).collect()
    }

    /// Matrix of `ad_X`; column `j` is `[X, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket_unchecked(x, &unit(n, j));
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&unit(self.dim, i)).expect("unit vector has algebra length")
    }

    /// `tr(ad_X)`; linear in `X`.
    pub fn ad_trace(&self, x: &[Rational]) -> Result<Rational> {
        Ok(self.ad_matrix(x)?.trace())
    }

    /// Coefficients of the linear form `X ↦ tr(ad_X)`.
    pub fn trace_form(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.ad_basis(i).trace()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.trace_form().iter().all(Zero::is_zero)
    }

    /// `{X : [e_j, X] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let blocks: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        Matrix::stack(&blocks, n)
            .expect("ad matrices are n x n")
            .kernel()
    }

    /// Span of all `[e_i, e_j]`.
    pub fn commutator_ideal(&self) -> Subspace {
        Subspace::span(self.dim, self.table.iter().filter(|v| !is_zero_vec(v)).cloned().collect())
    }

    /// `[s, t]` for subspaces, as the span of brackets of basis vectors.
    pub fn bracket_subspaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in s.basis() {
            for b in t.basis() {
                let v = self.bracket_unchecked(a, b);
                if !is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.dim, vs)
    }

    /// Dimensions of `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …` until it stabilizes.
    pub fn derived_series(&self) -> Vec<usize> {
        self.series(|g, s| g.bracket_subspaces(s, s))
    }

    /// Dimensions of `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = Subspace::full(self.dim);
        self.series(|g, s| g.bracket_subspaces(&full, s))
    }

    fn series(&self, step: impl Fn(&Self, &Subspace) -> Subspace) -> Vec<usize> {
        let mut s = Subspace::full(self.dim);
        let mut dims = vec![s.dim()];
        loop {
            let next = step(self, &s);
            if next.dim() == s.dim() {
                return dims;
            }
            dims.push(next.dim());
            s = next;
        }
    }

    /// Informational only.
    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0)
    }

    /// Informational only.
    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Structure constants in the basis `f_a = Σ_i S[i][a] e_i` (columns of `S`).
    pub fn change_basis(&self, s: &Matrix) -> Result<Self> {
        let n = self.dim;
        if s.rows() != n || s.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.rows(),
            });
        }
        let s_inv = s.inverse()?;
        let mut table = StructureTable::new(n);
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_unchecked(&s.column(a), &s.column(b));
                table.set(a, b, s_inv.mul_vec(&v)?)?;
            }
        }
        Self::validate(table)
    }
}

/// `e_i` in `Q^n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
