//! Left-invariant pseudo-Riemannian metrics, given by a constant Gram matrix
//! in the algebra basis.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Inertia, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoMetric {
    gram: Matrix,
    gram_inv: Matrix,
    signature: Inertia,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

impl PseudoMetric {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if gram.det()?.is_zero() {
            return Err(Error::Degenerate);
        }
        let signature = gram.signature()?;
        let gram_inv = gram.inverse()?;
        Ok(Self {
            gram,
            gram_inv,
            signature,
        })
    }

    /// `diag(I_p, -I_q)`.
    pub fn standard(p: usize, q: usize) -> Self {
        let diag: Vec<Rational> = (0..p + q)
            .map(|i| if i < p { crate::exact::one() } else { -crate::exact::one() })
            .collect();
        Self::new(Matrix::diagonal(&diag)).expect("standard form is non-degenerate")
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn signature(&self) -> Inertia {
        self.signature
    }

    pub fn p(&self) -> usize {
        self.signature.positive
    }

    pub fn q(&self) -> usize {
        self.signature.negative
    }

    pub fn g(&self, i: usize, j: usize) -> &Rational {
        &self.gram[(i, j)]
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        self.check_len(x)?;
        self.check_len(y)?;
        let gy = self.gram.mul_vec(y)?;
        Ok(crate::exact::dot(x, &gy))
    }

    /// `(⟨v, e_1⟩, …, ⟨v, e_n⟩)`
    pub fn lower(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v)?;
        self.gram.mul_vec(v)
    }

    /// Coordinates of the vector whose inner products with the basis are `w`.
    pub fn raise(&self, w: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(w)?;
        self.gram_inv.mul_vec(w)
    }

    /// Zero vectors report as lightlike.
    pub fn causal_character(&self, x: &[Rational]) -> Result<CausalCharacter> {
        let n = self.inner(x, x)?;
        Ok(if n.is_zero() {
            CausalCharacter::Lightlike
        } else if n.is_positive() {
            CausalCharacter::Spacelike
        } else {
            CausalCharacter::Timelike
        })
    }

    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        if s.is_zero() {
            return Ok(Subspace::full(self.dim()));
        }
        Ok(s.basis_matrix().mul(&self.gram)?.kernel())
    }

    /// Gram matrix of the metric restricted to the basis of `s`.
    pub fn restricted_gram(&self, s: &Subspace) -> Result<Matrix> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        let b = s.basis_matrix();
        b.mul(&self.gram)?.mul(&b.transpose())
    }

    /// True iff the restriction to `s` is singular. The zero subspace counts as non-degenerate.
    pub fn restriction_degenerate(&self, s: &Subspace) -> Result<bool> {
        Ok(self.restricted_gram(s)?.det()?.is_zero())
    }

    /// Gram matrix `Sᵀ G S` in the basis given by the columns of `S`.
    pub fn change_basis(&self, s: &Matrix) -> Result<Self> {
        Self::new(s.transpose().mul(&self.gram)?.mul(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::lie::unit;

    fn lorentz2() -> PseudoMetric {
        PseudoMetric::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    fn nonuni3_metric() -> PseudoMetric {
        PseudoMetric::new(Matrix::from_i64(&[&[1, 0, 0], &[0, 0, -1], &[0, -1, 0]])).unwrap()
    }

    #[test]
    fn construction() {
        let m = lorentz2();
        assert_eq!((m.p(), m.q()), (1, 1));
        let e = PseudoMetric::new(Matrix::identity(3)).unwrap();
        assert_eq!((e.p(), e.q()), (3, 0));
        assert_eq!(
            PseudoMetric::new(Matrix::from_i64(&[&[1, 1], &[1, 1]])),
            Err(Error::Degenerate)
        );
        assert_eq!(
            PseudoMetric::new(Matrix::from_i64(&[&[1, 2], &[0, 1]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn inner_products() {
        let m = lorentz2();
        assert_eq!(m.inner(&unit(2, 1), &unit(2, 1)).unwrap(), int(0));
        let x = vec![int(2), int(-3)];
        let y = vec![int(5), int(7)];
        assert_eq!(m.inner(&x, &y).unwrap(), m.inner(&y, &x).unwrap());
        assert_eq!(nonuni3_metric().inner(&unit(3, 1), &unit(3, 2)).unwrap(), int(-1));
    }

    #[test]
    fn causal_characters() {
        let m = PseudoMetric::standard(1, 1);
        assert_eq!(m.causal_character(&unit(2, 0)).unwrap(), CausalCharacter::Spacelike);
        assert_eq!(m.causal_character(&unit(2, 1)).unwrap(), CausalCharacter::Timelike);
        assert_eq!(
            m.causal_character(&[int(1), int(1)]).unwrap(),
            CausalCharacter::Lightlike
        );
        assert_eq!(
            nonuni3_metric().causal_character(&unit(3, 2)).unwrap(),
            CausalCharacter::Lightlike
        );
    }

    #[test]
    fn complements() {
        let m = lorentz2();
        let e2 = Subspace::span(2, vec![unit(2, 1)]);
        assert_eq!(m.orthogonal_complement(&e2).unwrap(), e2);
        assert!(m.orthogonal_complement(&Subspace::full(2)).unwrap().is_zero());
        let d = PseudoMetric::standard(2, 1);
        assert_eq!(
            d.orthogonal_complement(&Subspace::span(3, vec![unit(3, 0)])).unwrap(),
            Subspace::span(3, vec![unit(3, 1), unit(3, 2)])
        );
        assert!(matches!(
            d.orthogonal_complement(&e2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_restrictions() {
        assert!(lorentz2()
            .restriction_degenerate(&Subspace::span(2, vec![unit(2, 1)]))
            .unwrap());
        assert!(!PseudoMetric::standard(2, 1)
            .restriction_degenerate(&Subspace::span(3, vec![unit(3, 0), unit(3, 1)]))
            .unwrap());
        let s = Subspace::span(3, vec![unit(3, 0), unit(3, 1)]);
        let m = nonuni3_metric();
        assert_eq!(m.restricted_gram(&s).unwrap(), Matrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(m.restriction_degenerate(&s).unwrap());
    }
}
