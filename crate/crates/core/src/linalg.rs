//! Dense complex linear algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64 as C64;

pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Pairwise summation in the given order. Deterministic and with O(log n)
/// error growth.
pub fn pairwise_sum(terms: &[C64]) -> C64 {
    const LEAF: usize = 8;
    if terms.len() <= LEAF {
        return terms.iter().fold(C64::new(0.0, 0.0), |acc, t| acc + t);
    }
    let mid = terms.len() / 2;
    pairwise_sum(&terms[..mid]) + pairwise_sum(&terms[mid..])
}

pub fn pairwise_sum_real(terms: &[f64]) -> f64 {
    const LEAF: usize = 8;
    if terms.len() <= LEAF {
        return terms.iter().sum();
    }
    let mid = terms.len() / 2;
    pairwise_sum_real(&terms[..mid]) + pairwise_sum_real(&terms[mid..])
}

/// Largest singular value.
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .cloned()
        .fold(0.0, f64::max)
}

/// Frobenius (Hilbert–Schmidt) norm.
pub fn hs_norm(m: &CMatrix) -> f64 {
    m.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Kronecker product with row index `i * b.nrows() + k`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn trace(m: &CMatrix) -> C64 {
    let terms: Vec<C64> = (0..m.nrows().min(m.ncols())).map(|i| m[(i, i)]).collect();
    pairwise_sum(&terms)
}

/// `Tr(A·B)` without forming the product.
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> C64 {
    assert_eq!(a.ncols(), b.nrows());
    assert_eq!(a.nrows(), b.ncols());
    let mut terms = Vec::with_capacity(a.nrows() * a.ncols());
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let x = a[(i, j)];
            if x != C64::new(0.0, 0.0) {
                terms.push(x * b[(j, i)]);
            }
        }
    }
    pairwise_sum(&terms)
}

/// Leading principal `k × k` block.
pub fn leading_block(m: &CMatrix, k: usize) -> CMatrix {
    m.view((0, 0), (k, k)).into_owned()
}

/// Unitary matrix inverse (conjugate transpose).
pub fn adjoint(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Matrix exponential of an anti-Hermitian matrix via the Hermitian
/// eigendecomposition of `i·A`.
pub fn expm_skew(a: &CMatrix) -> CMatrix {
    let h = a * C64::new(0.0, 1.0);
    let h = (&h + h.adjoint()) * C64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let d = eig.eigenvalues.len();
    let mut phases = CMatrix::zeros(d, d);
    for i in 0..d {
        // exp(A) = exp(-i H)
        phases[(i, i)] = C64::from_polar(1.0, -eig.eigenvalues[i]);
    }
    &eig.eigenvectors * phases * eig.eigenvectors.adjoint()
}

/// Dot product `Σ zₖ wₖ` without conjugation.
pub fn bilinear(z: &[C64], w: &[C64]) -> C64 {
    z.iter().zip(w).map(|(a, b)| a * b).sum()
}

pub fn mat_vec(m: &CMatrix, v: &[C64]) -> Vec<C64> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)] * v[j]).sum())
        .collect()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
