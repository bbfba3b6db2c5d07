//! Truncated Bargmann–Fock space.
//!
//! `H₀` is the space of holomorphic functions on `ℂⁿ` with norm
//! `‖f‖² = ∫ |f(z)|² e^{-|z|²/2λ} dμ_λ(z)` and `dμ_λ = (2πλ)^{-n} dx dy`.
//! The monomials are orthogonal with `‖w^p‖² = (2λ)^{|p|} p!`, so
//! `ê_p = w^p / √((2λ)^{|p|} p!)` is an orthonormal basis. A [`FockBasis`]
//! keeps every `ê_p` with `|p| ≤ cutoff`, ordered by total degree first and
//! lexicographically (descending) inside a degree, which makes every
//! degree truncation a leading principal block.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{pairwise_sum, CMatrix, C64};

/// Multi-index `p = (p₁,…,pₙ)` of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The unit index `e_k` in dimension `n`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k] = 1;
        MultiIndex(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `|p| = Σ pₖ`.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ln p! = Σ ln pₖ!`.
    pub fn ln_factorial(&self) -> f64 {
        self.0.iter().map(|&k| ln_factorial(k)).sum()
    }

    pub fn factorial(&self) -> f64 {
        self.0.iter().map(|&k| factorial(k)).product()
    }

    /// Entrywise order `p ≤ q`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.le(self) {
            return None;
        }
        Some(MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `z^p`, computed as a fixed-order product of coordinate powers.
    pub fn monomial(&self, z: &[C64]) -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        for (zk, &pk) in z.iter().zip(&self.0) {
            acc *= zk.powu(pk as u32);
        }
        acc
    }

    /// `z̄^p`.
    pub fn conj_monomial(&self, z: &[C64]) -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        for (zk, &pk) in z.iter().zip(&self.0) {
            acc *= zk.conj().powu(pk as u32);
        }
        acc
    }

    /// Binomial coefficient `(q choose p) = q!/(p!(q−p)!)` for `p ≤ q`.
    pub fn binomial(q: &MultiIndex, p: &MultiIndex) -> f64 {
        q.0.iter()
            .zip(&p.0)
            .map(|(&qk, &pk)| binomial(qk, pk))
            .product()
    }

    /// Every multi-index `k ≤ self`, in lexicographic order.
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &bound in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (bound + 1));
            for prefix in &out {
                for k in 0..=bound {
                    let mut v = prefix.clone();
                    v.push(k);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(MultiIndex).collect()
    }

    /// All multi-indices of length `n` and total degree exactly `d`, in
    /// descending lexicographic order.
    pub fn of_degree(n: usize, d: usize) -> Vec<MultiIndex> {
        fn rec(n: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if n == 1 {
                prefix.push(d);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=d).rev() {
                prefix.push(first);
                rec(n - 1, d - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(MultiIndex(vec![]));
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> Self {
        MultiIndex(v)
    }
}

impl From<&[usize]> for MultiIndex {
    fn from(v: &[usize]) -> Self {
        MultiIndex(v.to_vec())
    }
}

const LOG_SPACE_THRESHOLD: usize = 20;

pub fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|j| (j as f64).ln()).sum()
}

pub fn factorial(k: usize) -> f64 {
    if k > LOG_SPACE_THRESHOLD {
        return ln_factorial(k).exp();
    }
    (2..=k).map(|j| j as f64).product()
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc.round()
}

/// `‖w^p‖²_{H₀} = (2λ)^{|p|} p!`.
pub fn monomial_norm_sq(p: &MultiIndex, lambda: f64) -> f64 {
    let d = p.degree();
    if d > LOG_SPACE_THRESHOLD {
        return (d as f64 * (2.0 * lambda).ln() + p.ln_factorial()).exp();
    }
    (2.0 * lambda).powi(d as i32) * p.factorial()
}

/// Exact value of `∫ w^k w̄^l e^{-|w|²/λ} dμ_λ(w) = 2^{-n} λ^{|k|} k! δ_{kl}`.
pub fn gaussian_moment(k: &MultiIndex, l: &MultiIndex, lambda: f64) -> Result<f64> {
    if k.len() != l.len() {
        return Err(Error::DimensionMismatch {
            expected: k.len(),
            actual: l.len(),
        });
    }
    if k != l {
        return Ok(0.0);
    }
    let n = k.len() as i32;
    let d = k.degree();
    let log = -(n as f64) * 2f64.ln() + d as f64 * lambda.ln() + k.ln_factorial();
    if d > LOG_SPACE_THRESHOLD {
        Ok(log.exp())
    } else {
        Ok(2f64.powi(-n) * lambda.powi(d as i32) * k.factorial())
    }
}

struct BasisData {
    n: usize,
    lambda: f64,
    cutoff: usize,
    indices: Vec<MultiIndex>,
    lookup: HashMap<MultiIndex, usize>,
    // √((2λ)^{|p|} p!) per basis index
    norms: Vec<f64>,
    // number of basis elements with degree ≤ d, for d = 0..=cutoff
    degree_ends: Vec<usize>,
}

/// Truncated orthonormal monomial basis `{ê_p : |p| ≤ cutoff}`.
#[derive(Clone)]
pub struct FockBasis(Arc<BasisData>);

impl FockBasis {
    pub fn new(n: usize, lambda: f64, cutoff: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dimension n must be positive".into()));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
        }
        let mut indices = Vec::new();
        let mut degree_ends = Vec::with_capacity(cutoff + 1);
        for d in 0..=cutoff {
            indices.extend(MultiIndex::of_degree(n, d));
            degree_ends.push(indices.len());
        }
        let lookup = indices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let norms = indices.iter().map(|p| monomial_norm_sq(p, lambda).sqrt()).collect();
        Ok(FockBasis(Arc::new(BasisData {
            n,
            lambda,
            cutoff,
            indices,
            lookup,
            norms,
            degree_ends,
        })))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn lambda(&self) -> f64 {
        self.0.lambda
    }

    pub fn cutoff(&self) -> usize {
        self.0.cutoff
    }

    pub fn dim(&self) -> usize {
        self.0.indices.len()
    }

    pub fn index(&self, i: usize) -> &MultiIndex {
        &self.0.indices[i]
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.0.indices
    }

    pub fn position(&self, p: &MultiIndex) -> Option<usize> {
        self.0.lookup.get(p).copied()
    }

    /// `√((2λ)^{|p|} p!)` for the basis element at position `i`.
    pub fn norm(&self, i: usize) -> f64 {
        self.0.norms[i]
    }

    /// `ln √((2λ)^{|p|} p!)` for the basis element at position `i`.
    pub fn ln_norm(&self, i: usize) -> f64 {
        let p = &self.0.indices[i];
        0.5 * (p.degree() as f64 * (2.0 * self.0.lambda).ln() + p.ln_factorial())
    }

    /// Number of basis elements of total degree `≤ d` (the size of the
    /// leading block that represents the degree-`d` truncation).
    pub fn block_dim(&self, d: usize) -> usize {
        self.0.degree_ends[d.min(self.0.cutoff)]
    }

    /// Same `n`, `λ`, and cutoff.
    pub fn same_as(&self, other: &FockBasis) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n
                && self.0.lambda == other.0.lambda
                && self.0.cutoff == other.0.cutoff)
    }

    fn check_point(&self, z: &[C64]) -> Result<()> {
        if z.len() != self.0.n {
            return Err(Error::DimensionMismatch {
                expected: self.0.n,
                actual: z.len(),
            });
        }
        Ok(())
    }

    /// `ê_p(z)` at position `i`.
    pub fn eval_basis(&self, i: usize, z: &[C64]) -> C64 {
        self.0.indices[i].monomial(z) / self.0.norms[i]
    }
}

impl fmt::Debug for FockBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FockBasis")
            .field("n", &self.0.n)
            .field("lambda", &self.0.lambda)
            .field("cutoff", &self.0.cutoff)
            .field("dim", &self.dim())
            .finish()
    }
}

impl PartialEq for FockBasis {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Element of the truncated space, as coefficients on `{ê_p}`.
#[derive(Clone, Debug)]
pub struct FockVector {
    basis: FockBasis,
    coeffs: Vec<C64>,
}

impl FockVector {
    pub fn new(basis: &FockBasis, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                actual: coeffs.len(),
            });
        }
        Ok(FockVector {
            basis: basis.clone(),
            coeffs,
        })
    }

    pub fn zeros(basis: &FockBasis) -> Self {
        FockVector {
            basis: basis.clone(),
            coeffs: vec![C64::new(0.0, 0.0); basis.dim()],
        }
    }

    /// The basis vector `ê_p`.
    pub fn basis_vector(basis: &FockBasis, p: &MultiIndex) -> Result<Self> {
        let i = basis
            .position(p)
            .ok_or_else(|| Error::InvalidParameter(format!("multi-index {p:?} outside the basis")))?;
        let mut v = Self::zeros(basis);
        v.coeffs[i] = C64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        inner_product(self, self)
            .map(|x| x.re.max(0.0).sqrt())
            .unwrap_or(f64::NAN)
    }
}

/// Orthogonal projection of the coherent state `e_z(w) = exp(z̄w/2λ)` onto
/// the truncated space: the coefficient on `ê_p` is `z̄^p / √((2λ)^{|p|} p!)`.
pub fn coherent_state(z: &[C64], basis: &FockBasis) -> Result<FockVector> {
    basis.check_point(z)?;
    let coeffs = (0..basis.dim())
        .map(|i| basis.index(i).conj_monomial(z) / basis.norm(i))
        .collect();
    Ok(FockVector {
        basis: basis.clone(),
        coeffs,
    })
}

/// Relative mass of `e_z` lost by truncation:
/// `(‖e_z‖² − ‖P_N e_z‖²) / ‖e_z‖²` with `‖e_z‖² = exp(|z|²/2λ)`.
///
/// The degree-`d` part of `‖e_z‖²` is `x^d/d!` with `x = |z|²/2λ`, so the
/// tail is summed directly rather than by cancellation.
pub fn coherent_tail(z: &[C64], basis: &FockBasis) -> f64 {
    let x: f64 = z.iter().map(|w| w.norm_sqr()).sum::<f64>() / (2.0 * basis.lambda());
    if x == 0.0 {
        return 0.0;
    }
    let start = basis.cutoff() + 1;
    let mut term = (start as f64 * x.ln() - ln_factorial(start) - x).exp();
    let mut tail = 0.0;
    let mut d = start;
    while term > 1e-300 && (term > tail * 1e-17 || (d as f64) < x) {
        tail += term;
        d += 1;
        term *= x / d as f64;
        if d > start + 10_000 {
            break;
        }
    }
    tail
}

/// `f(z) = Σ_p f_p z^p / √((2λ)^{|p|} p!)`.
pub fn evaluate(f: &FockVector, z: &[C64]) -> Result<C64> {
    f.basis.check_point(z)?;
    let terms: Vec<C64> = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * (f.basis.index(i).monomial(z) / f.basis.norm(i)))
        .collect();
    Ok(pairwise_sum(&terms))
}

/// `⟨f, g⟩ = Σ_p f_p · conj(g_p)` (linear in the first slot).
pub fn inner_product(f: &FockVector, g: &FockVector) -> Result<C64> {
    if !f.basis.same_as(&g.basis) {
        return Err(Error::BasisMismatch);
    }
    let terms: Vec<C64> = f.coeffs.iter().zip(&g.coeffs).map(|(a, b)| a * b.conj()).collect();
    Ok(pairwise_sum(&terms))
}

/// Dense matrix of an operator on the truncated space.
#[derive(Clone, Debug)]
pub struct FockOperator {
    basis: FockBasis,
    matrix: CMatrix,
}

impl FockOperator {
    pub fn new(basis: &FockBasis, matrix: CMatrix) -> Result<Self> {
        let d = basis.dim();
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(FockOperator {
            basis: basis.clone(),
            matrix,
        })
    }

    pub fn zeros(basis: &FockBasis) -> Self {
        let d = basis.dim();
        FockOperator {
            basis: basis.clone(),
            matrix: CMatrix::zeros(d, d),
        }
    }

    pub fn identity(basis: &FockBasis) -> Self {
        let d = basis.dim();
        FockOperator {
            basis: basis.clone(),
            matrix: CMatrix::identity(d, d),
        }
    }

    /// Rank-one `|ê_p⟩⟨ê_q|`.
    pub fn matrix_unit(basis: &FockBasis, p: &MultiIndex, q: &MultiIndex) -> Result<Self> {
        let missing = |m: &MultiIndex| Error::InvalidParameter(format!("multi-index {m:?} outside the basis"));
        let i = basis.position(p).ok_or_else(|| missing(p))?;
        let j = basis.position(q).ok_or_else(|| missing(q))?;
        let mut op = Self::zeros(basis);
        op.matrix[(i, j)] = C64::new(1.0, 0.0);
        Ok(op)
    }

    /// `|f⟩⟨g|`.
    pub fn outer(f: &FockVector, g: &FockVector) -> Result<Self> {
        if !f.basis.same_as(&g.basis) {
            return Err(Error::BasisMismatch);
        }
        let d = f.basis.dim();
        let matrix = CMatrix::from_fn(d, d, |i, j| f.coeffs[i] * g.coeffs[j].conj());
        Ok(FockOperator {
            basis: f.basis.clone(),
            matrix,
        })
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn entry(&self, p: &MultiIndex, q: &MultiIndex) -> Option<C64> {
        Some(self.matrix[(self.basis.position(p)?, self.basis.position(q)?)])
    }

    pub fn adjoint(&self) -> Self {
        FockOperator {
            basis: self.basis.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    /// Smallest `d` such that every nonzero row and column has degree `≤ d`.
    pub fn support_degree(&self) -> usize {
        let mut support = 0;
        for i in 0..self.matrix.nrows() {
            for j in 0..self.matrix.ncols() {
                if self.matrix[(i, j)] != C64::new(0.0, 0.0) {
                    support = support
                        .max(self.basis.index(i).degree())
                        .max(self.basis.index(j).degree());
                }
            }
        }
        support
    }

    pub fn apply(&self, f: &FockVector) -> Result<FockVector> {
        if !self.basis.same_as(&f.basis) {
            return Err(Error::BasisMismatch);
        }
        Ok(FockVector {
            basis: self.basis.clone(),
            coeffs: crate::linalg::mat_vec(&self.matrix, &f.coeffs),
        })
    }

    pub fn compose(&self, other: &FockOperator) -> Result<Self> {
        if !self.basis.same_as(&other.basis) {
            return Err(Error::BasisMismatch);
        }
        Ok(FockOperator {
            basis: self.basis.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn add(&self, other: &FockOperator) -> Result<Self> {
        if !self.basis.same_as(&other.basis) {
            return Err(Error::BasisMismatch);
        }
        Ok(FockOperator {
            basis: self.basis.clone(),
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn scale(&self, s: C64) -> Self {
        FockOperator {
            basis: self.basis.clone(),
            matrix: &self.matrix * s,
        }
    }

    /// Leading block on degrees `≤ d`.
    pub fn block(&self, d: usize) -> CMatrix {
        crate::linalg::leading_block(&self.matrix, self.basis.block_dim(d))
    }

    /// Re-express on a basis with a different cutoff (same `n`, `λ`),
    /// padding with zeros or dropping high-degree rows and columns.
    pub fn rebase(&self, target: &FockBasis) -> Result<Self> {
        if target.n() != self.basis.n() || target.lambda() != self.basis.lambda() {
            return Err(Error::BasisMismatch);
        }
        let k = target.dim().min(self.basis.dim());
        let mut m = CMatrix::zeros(target.dim(), target.dim());
        m.view_mut((0, 0), (k, k)).copy_from(&self.matrix.view((0, 0), (k, k)));
        Ok(FockOperator {
            basis: target.clone(),
            matrix: m,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, re};

    #[test]
    fn basis_dimension_is_binomial() {
        for n in 1..=3 {
            for cutoff in 0..=8 {
                let b = FockBasis::new(n, 1.0, cutoff).unwrap();
                assert_eq!(b.dim() as f64, binomial(cutoff + n, n));
            }
        }
    }

    #[test]
    fn basis_is_graded() {
        let b = FockBasis::new(2, 1.0, 3).unwrap();
        let degrees: Vec<usize> = b.indices().iter().map(|p| p.degree()).collect();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(b.index(1), &MultiIndex::new(vec![1, 0]));
        assert_eq!(b.index(2), &MultiIndex::new(vec![0, 1]));
        assert_eq!(b.block_dim(1), 3);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(monomial_norm_sq(&MultiIndex::new(vec![0]), 1.0), 1.0);
        assert_eq!(monomial_norm_sq(&MultiIndex::new(vec![1]), 1.0), 2.0);
        assert_eq!(monomial_norm_sq(&MultiIndex::new(vec![2, 1]), 0.5), 2.0);
    }

    #[test]
    fn log_space_agrees_with_direct() {
        let p = MultiIndex::new(vec![15, 10]);
        let direct = 2.0f64.powi(25) * factorial(15) * factorial(10);
        assert!((monomial_norm_sq(&p, 1.0) / direct - 1.0).abs() < 1e-12);
    }

    #[test]
    fn moment_examples() {
        let one = MultiIndex::new(vec![1]);
        assert_eq!(gaussian_moment(&one, &one, 1.0).unwrap(), 0.5);
        assert_eq!(gaussian_moment(&one, &MultiIndex::new(vec![2]), 1.0).unwrap(), 0.0);
        let z2 = MultiIndex::zero(2);
        assert_eq!(gaussian_moment(&z2, &z2, 2.0).unwrap(), 0.25);
        assert!(gaussian_moment(&one, &z2, 1.0).is_err());
    }

    #[test]
    fn coherent_state_examples() {
        let b = FockBasis::new(1, 1.0, 10).unwrap();
        let e0 = coherent_state(&[c(0.0, 0.0)], &b).unwrap();
        assert_eq!(e0.coeffs()[0], re(1.0));
        assert!(e0.coeffs()[1..].iter().all(|x| *x == re(0.0)));
        let e2 = coherent_state(&[re(2.0)], &b).unwrap();
        assert!((e2.coeffs()[1] - re(2f64.sqrt())).norm() < 1e-15);
    }

    #[test]
    fn coherent_norm_converges_from_below() {
        // |z|² = 2λ ln 4 gives ‖e_z‖² = 4
        let lambda = 1.0;
        let z = [re((2.0 * lambda * 4f64.ln()).sqrt())];
        let mut last = 0.0;
        for cutoff in [4, 8, 16, 32] {
            let b = FockBasis::new(1, lambda, cutoff).unwrap();
            let e = coherent_state(&z, &b).unwrap();
            let nrm = inner_product(&e, &e).unwrap().re;
            assert!(nrm > last && nrm <= 4.0 + 1e-12);
            assert!(((4.0 - nrm) / 4.0 - coherent_tail(&z, &b)).abs() < 1e-13);
            last = nrm;
        }
        assert!((last - 4.0).abs() < 1e-12);
    }

    #[test]
    fn evaluate_examples() {
        let b = FockBasis::new(1, 1.0, 4).unwrap();
        let e0 = FockVector::basis_vector(&b, &MultiIndex::zero(1)).unwrap();
        assert_eq!(evaluate(&e0, &[c(0.3, 2.0)]).unwrap(), re(1.0));
        let e1 = FockVector::basis_vector(&b, &MultiIndex::new(vec![1])).unwrap();
        assert!((evaluate(&e1, &[re(2.0)]).unwrap() - re(2f64.sqrt())).norm() < 1e-15);
    }

    #[test]
    fn reproducing_is_bit_exact() {
        let b = FockBasis::new(2, 0.7, 6).unwrap();
        let coeffs: Vec<C64> = (0..b.dim()).map(|k| c((k as f64).sin(), (k as f64 * 0.3).cos())).collect();
        let f = FockVector::new(&b, coeffs).unwrap();
        let z = [c(0.4, -1.1), c(-0.9, 0.25)];
        let direct = evaluate(&f, &z).unwrap();
        let via_kernel = inner_product(&f, &coherent_state(&z, &b).unwrap()).unwrap();
        assert_eq!(direct, via_kernel);
    }

    #[test]
    fn coherent_overlap_is_kernel() {
        let b = FockBasis::new(1, 1.5, 40).unwrap();
        let z = [c(0.5, 0.2)];
        let w = [c(-0.3, 0.7)];
        let ez = coherent_state(&z, &b).unwrap();
        let ew = coherent_state(&w, &b).unwrap();
        // ⟨e_z, e_w⟩ = e_z(w) = e^{w z̄/2λ}
        let expected = (w[0] * z[0].conj() / (2.0 * 1.5)).exp();
        let got = inner_product(&ez, &ew).unwrap();
        assert!((got - expected).norm() < 1e-13, "{got} vs {expected}");
    }

    #[test]
    fn support_degree_and_units() {
        let b = FockBasis::new(1, 1.0, 6).unwrap();
        let a = FockOperator::matrix_unit(&b, &MultiIndex::new(vec![2]), &MultiIndex::new(vec![4])).unwrap();
        assert_eq!(a.support_degree(), 4);
        assert_eq!(FockOperator::identity(&b).support_degree(), 6);
        assert_eq!(a.adjoint().matrix()[(4, 2)], re(1.0));
    }
}
