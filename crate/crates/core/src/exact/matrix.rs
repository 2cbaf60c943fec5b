use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Sylvester inertia counts of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    /// An empty row list gives a `0 x cols` matrix only through [`Matrix::zeros`].
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(n, cols, entries)
    }

    /// Convenience constructor for integer tables. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| super::int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Vertical concatenation. Column counts must agree.
    pub fn stack(blocks: &[Matrix], cols: usize) -> Result<Matrix> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Matrix::new(rows, cols, entries)
    }

    /// Reduced row-echelon form with leading ones; returns the pivot columns (ascending).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = &a[(r, j)] * &f;
                    if !v.is_zero() {
                        a[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{v : self · v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        let mut free = Vec::new();
        for c in 0..self.cols {
            if pivot_iter.peek() == Some(&&c) {
                pivot_iter.next();
            } else {
                free.push(c);
            }
        }
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Determinant by fraction-free (Bareiss) elimination on an integer rescaling.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row: det(A) = det(D·A) / Π d_i.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
            scale *= l;
        }
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].clone();
        if negate {
            d = -d;
        }
        Ok(Rational::new(d, scale))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Congruence diagonalization over the rationals: returns `(S, d)` with
    /// `Sᵀ · self · S = diag(d)` and `S` invertible.
    pub fn congruence_diagonalize(&self) -> Result<(Matrix, Vec<Rational>)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut s = Matrix::identity(n);
        for k in 0..n {
            if a[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                    a.swap_rows(k, j);
                    a.swap_cols(k, j);
                    s.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                    // a_kk = a_jj = 0, a_kj != 0: e_k + e_j has norm 2·a_kj.
                    a.add_row(k, j, &Rational::one());
                    a.add_col(k, j, &Rational::one());
                    s.add_col(k, j, &Rational::one());
                } else {
                    continue;
                }
            }
            let pivot = a[(k, k)].clone();
            for j in k + 1..n {
                if a[(j, k)].is_zero() {
                    continue;
                }
                let f = -(&a[(j, k)] / &pivot);
                a.add_row(j, k, &f);
                a.add_col(j, k, &f);
                s.add_col(j, k, &f);
            }
        }
        let d = (0..n).map(|i| a[(i, i)].clone()).collect();
        Ok((s, d))
    }

    /// Counts of positive, negative, and zero squares (Sylvester inertia).
    pub fn signature(&self) -> Result<Inertia> {
        let (_, d) = self.congruence_diagonalize()?;
        let mut inertia = Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        for x in &d {
            if x.is_zero() {
                inertia.zero += 1;
            } else if x.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
        }
        Ok(inertia)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f · row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &Rational) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * f;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += f · col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &Rational) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * f;
            self[(i, dst)] += v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Inertia {
    pub fn min_pq(&self) -> usize {
        self.positive.min(self.negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(Matrix::identity(2).kernel().dim(), 0);
    }

    #[test]
    fn kernel_rank_one() {
        let k = Matrix::from_i64(&[&[1, 1], &[1, 1]]).kernel();
        assert_eq!(k.basis(), &[vec![int(1), int(-1)]]);
    }

    #[test]
    fn kernel_of_two_dim_conformal_system() {
        // rows: 2·x2 = 0 ; -x1 - 2ρ = 0 ; 0 = 0 in unknowns (x1, x2, ρ)
        let m = Matrix::from_i64(&[&[0, 2, 0], &[-1, 0, -2], &[0, 0, 0]]);
        let k = m.kernel();
        assert_eq!(k.basis(), &[vec![int(1), int(0), rat(-1, 2)]]);
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn inverses() {
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
        let d = Matrix::diagonal(&[int(1), int(1), int(-1)]);
        assert_eq!(d.inverse().unwrap(), d);
        let s = Matrix::diagonal(&[int(2), rat(1, 2)]);
        assert_eq!(s.inverse().unwrap(), Matrix::diagonal(&[rat(1, 2), int(2)]));
        assert_eq!(
            Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), int(3), int(0)],
            vec![int(1), rat(-2, 3), int(5)],
            vec![int(0), int(1), rat(1, 7)],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let expect = rat(1, 2) * (rat(-2, 3) * rat(1, 7) - int(5)) - int(3) * (rat(1, 7) - int(0));
        assert_eq!(m.det().unwrap(), expect);
    }

    #[test]
    fn signatures() {
        let sig = |m: &Matrix| {
            let s = m.signature().unwrap();
            (s.positive, s.negative, s.zero)
        };
        assert_eq!(sig(&Matrix::diagonal(&[int(1), int(1), int(-1)])), (2, 1, 0));
        assert_eq!(sig(&Matrix::from_i64(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        let ex41 = Matrix::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, -1, 0],
        ]);
        assert_eq!(sig(&ex41), (3, 1, 0));
        assert_eq!(sig(&Matrix::from_i64(&[&[1, 1], &[1, 1]])), (1, 0, 1));
        assert_eq!(
            Matrix::from_i64(&[&[0, 1], &[2, 0]]).signature(),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn congruence_transform_diagonalizes() {
        let m = Matrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        let (s, d) = m.congruence_diagonalize().unwrap();
        let lhs = s.transpose().mul(&m).unwrap().mul(&s).unwrap();
        assert_eq!(lhs, Matrix::diagonal(&d));
        assert!(s.det().unwrap() != int(0));
    }
}
