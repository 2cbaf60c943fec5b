use num_traits::Zero;

use super::{Matrix, Rational};

/// Linear subspace of `Q^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. Two equal subspaces always compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, Matrix::identity(ambient_dim).to_rows())
    }

    /// Canonical span of arbitrary (possibly dependent) vectors of length `ambient_dim`.
    ///
    /// Panics if a vector has the wrong length.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "spanning vector length differs from ambient dimension {ambient_dim}"
        );
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let (r, pivots) = Matrix::from_rows(vectors)
            .expect("lengths checked above")
            .rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as the rows of a `dim x ambient_dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        let entries = self.basis.iter().flatten().cloned().collect();
        Matrix::new(self.dim(), self.ambient_dim, entries).expect("rows have ambient length")
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).expect("equal lengths").rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Linear combination `Σ c_k b_k` of the basis vectors.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }
}
