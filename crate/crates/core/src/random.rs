//! Seeded generators of rational matrices, metrics, and Lie algebras for the
//! property harnesses. Identical seeds give identical output.

use num_traits::Zero;
use rand::Rng;

use crate::catalog::{instantiate, Params};
use crate::exact::{Matrix, Rational};
use crate::lie::{LieAlgebra, StructureTable};
use crate::metric::PseudoMetric;

pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

/// Small rational `a / b` with `|a| ≤ num_bound`, `1 ≤ b ≤ den_bound`.
pub fn rational<R: Rng>(rng: &mut R, num_bound: i64, den_bound: i64) -> Rational {
    Rational::new(
        rng.gen_range(-num_bound..=num_bound).into(),
        rng.gen_range(1..=den_bound).into(),
    )
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, num_bound: i64, den_bound: i64) -> Matrix {
    let entries = (0..rows * cols)
        .map(|_| rational(rng, num_bound, den_bound))
        .collect();
    Matrix::new(rows, cols, entries).expect("entry count matches shape")
}

/// Rejection-samples a random invertible `n x n` matrix with small integer entries.
pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, n, n, 2, 1);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn symmetric<R: Rng>(rng: &mut R, n: usize, num_bound: i64, den_bound: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rational(rng, num_bound, den_bound);
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// `Sᵀ diag(I_p, −I_q) S` for a random invertible `S`; signature is `(p, q)` by construction.
pub fn metric_with_signature<R: Rng>(rng: &mut R, p: usize, q: usize) -> PseudoMetric {
    let s = invertible(rng, p + q);
    PseudoMetric::standard(p, q)
        .change_basis(&s)
        .expect("congruent to a non-degenerate form")
}

/// Random valid Lie algebra of dimension `n` (1..=4 for the conjugated kinds).
///
/// Draws either a semidirect product `R ⋉ R^{n-1}` with a random derivation
/// matrix, which always satisfies Jacobi, or a random change of basis of a
/// catalog algebra of the same dimension.
pub fn algebra<R: Rng>(rng: &mut R, n: usize) -> LieAlgebra {
    let catalog: &[(&str, &[(&str, i64)])] = match n {
        2 => &[("affine2", &[])],
        3 => &[
            ("heisenberg3", &[]),
            ("so3", &[]),
            ("sl2", &[]),
            ("nonuni3", &[("beta", 1)]),
            ("general3", &[("alpha", 1), ("beta", 2), ("gamma", -1), ("delta", 3)]),
        ],
        4 => &[("damekricci4", &[("alpha", 2)]), ("gradedN", &[]), ("diagonalN", &[])],
        _ => &[],
    };
    if catalog.is_empty() || n < 2 || rng.gen_bool(0.5) {
        return semidirect(rng, n);
    }
    let (name, ps) = catalog[rng.gen_range(0..catalog.len())];
    let params: Params = ps
        .iter()
        .map(|(k, v)| (k.to_string(), Rational::from_integer((*v).into())))
        .collect();
    let base = instantiate(name, &params).expect("catalog instance").algebra;
    let s = invertible(rng, n);
    base.change_basis(&s).expect("basis change of a valid algebra is valid")
}

/// `[e_n, e_i] = Σ_k D_ki e_k` on an abelian ideal `span{e_1, …, e_{n-1}}`.
pub fn semidirect<R: Rng>(rng: &mut R, n: usize) -> LieAlgebra {
    if n < 2 {
        return LieAlgebra::abelian(n);
    }
    let d = matrix(rng, n - 1, n - 1, 2, 2);
    let mut t = StructureTable::new(n);
    for i in 0..n - 1 {
        let mut col = d.column(i);
        col.push(Rational::zero());
        t.set(n - 1, i, col).expect("indices in range");
    }
    LieAlgebra::validate(t).expect("abelian ideal extension satisfies Jacobi")
}

/// Random (algebra, metric) pair of dimension `n` with a random signature.
pub fn instance<R: Rng>(rng: &mut R, n: usize) -> (LieAlgebra, PseudoMetric) {
    let g = algebra(rng, n);
    let q = rng.gen_range(0..=n);
    (g, metric_with_signature(rng, n - q, q))
}
