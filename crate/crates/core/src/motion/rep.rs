//! The generic representation `π = π₀τ ⊗ ρ` on `H₀ ⊗ V` and operators on
//! that product.

use crate::compact::CompactIrrep;
use crate::diffop::DiffOperator;
use crate::error::{Error, Result};
use crate::fock::{FockBasis, FockOperator};
use crate::heisenberg::{dpi0_matrix, pi0_matrix};
use crate::linalg::{kron, CMatrix, C64};
use crate::poly::Polynomial;

use super::group::{MotionAlgebraElement, MotionElement};

/// `(τ(k)f)(z) = f(k⁻¹z)`, exactly (it preserves degree).
pub fn tau_matrix(k: &CMatrix, basis: &FockBasis) -> Result<FockOperator> {
    let n = basis.n();
    if k.nrows() != n || k.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: k.nrows(),
        });
    }
    let kinv = k.adjoint();
    let rows: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::linear(&kinv.row(i).iter().copied().collect::<Vec<_>>()))
        .collect();
    let dim = basis.dim();
    let mut m = CMatrix::zeros(dim, dim);
    for (j, q) in basis.indices().iter().enumerate() {
        let mut image = Polynomial::one(n);
        for (i, &e) in q.entries().iter().enumerate() {
            image = image.mul(&rows[i].pow(e));
        }
        for (p, coeff) in image.terms() {
            if let Some(i) = basis.position(p) {
                m[(i, j)] = coeff * (basis.ln_norm(i) - basis.ln_norm(j)).exp();
            }
        }
    }
    FockOperator::new(basis, m)
}

/// `dτ(A)f = −df(Az)`, exactly (it preserves degree).
pub fn dtau_matrix(a: &CMatrix, basis: &FockBasis) -> Result<FockOperator> {
    if a.nrows() != basis.n() || a.ncols() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            actual: a.nrows(),
        });
    }
    DiffOperator::dtau(a, basis.lambda()).matrix(basis)
}

/// An operator on `H₀ ⊗ V`, stored as `Σᵢ A₀ⁱ ⊗ A₁ⁱ`. The dense form uses
/// the Kronecker index `fock · dim V + v`.
#[derive(Clone, Debug)]
pub struct ProductOperator {
    basis: FockBasis,
    dim_v: usize,
    terms: Vec<(FockOperator, CMatrix)>,
}

impl ProductOperator {
    pub fn zero(basis: &FockBasis, dim_v: usize) -> Self {
        ProductOperator {
            basis: basis.clone(),
            dim_v,
            terms: Vec::new(),
        }
    }

    pub fn elementary(a0: FockOperator, a1: CMatrix) -> Result<Self> {
        let mut p = ProductOperator::zero(&a0.basis().clone(), a1.nrows());
        p.push(a0, a1)?;
        Ok(p)
    }

    pub fn identity(basis: &FockBasis, dim_v: usize) -> Self {
        ProductOperator {
            basis: basis.clone(),
            dim_v,
            terms: vec![(FockOperator::identity(basis), CMatrix::identity(dim_v, dim_v))],
        }
    }

    pub fn push(&mut self, a0: FockOperator, a1: CMatrix) -> Result<()> {
        if !a0.basis().same_as(&self.basis) {
            return Err(Error::BasisMismatch);
        }
        if a1.nrows() != self.dim_v || a1.ncols() != self.dim_v {
            return Err(Error::DimensionMismatch {
                expected: self.dim_v,
                actual: a1.nrows(),
            });
        }
        self.terms.push((a0, a1));
        Ok(())
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim(&self) -> usize {
        self.basis.dim() * self.dim_v
    }

    pub fn terms(&self) -> &[(FockOperator, CMatrix)] {
        &self.terms
    }

    /// `Σᵢ A₀ⁱ ⊗ A₁ⁱ` as a dense matrix.
    pub fn dense(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim(), self.dim());
        for (a0, a1) in &self.terms {
            out += kron(a0.matrix(), a1);
        }
        out
    }

    /// Partial-trace reshaping `A = Σ_{ij} A^{(ij)} ⊗ E_{ij}`.
    pub fn from_dense(basis: &FockBasis, dim_v: usize, m: &CMatrix) -> Result<Self> {
        let dim = basis.dim() * dim_v;
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: m.nrows(),
            });
        }
        let f = basis.dim();
        let mut out = ProductOperator::zero(basis, dim_v);
        for i in 0..dim_v {
            for j in 0..dim_v {
                let block = CMatrix::from_fn(f, f, |r, s| m[(r * dim_v + i, s * dim_v + j)]);
                let mut e = CMatrix::zeros(dim_v, dim_v);
                e[(i, j)] = C64::new(1.0, 0.0);
                out.terms.push((FockOperator::new(basis, block)?, e));
            }
        }
        Ok(out)
    }

    /// The same operator with at most `dim V²` terms, one per matrix unit.
    pub fn compressed(&self) -> Self {
        let d = self.dim_v;
        let mut slots: Vec<CMatrix> = vec![CMatrix::zeros(self.basis.dim(), self.basis.dim()); d * d];
        for (a0, a1) in &self.terms {
            for i in 0..d {
                for j in 0..d {
                    let c = a1[(i, j)];
                    if c != C64::new(0.0, 0.0) {
                        slots[i * d + j] += a0.matrix() * c;
                    }
                }
            }
        }
        let mut out = ProductOperator::zero(&self.basis, d);
        for (idx, block) in slots.into_iter().enumerate() {
            if block.iter().all(|x| *x == C64::new(0.0, 0.0)) {
                continue;
            }
            let mut e = CMatrix::zeros(d, d);
            e[(idx / d, idx % d)] = C64::new(1.0, 0.0);
            out.terms.push((FockOperator::new(&self.basis, block).expect("same basis"), e));
        }
        out
    }

    fn check_same(&self, other: &ProductOperator) -> Result<()> {
        if !self.basis.same_as(&other.basis) {
            return Err(Error::BasisMismatch);
        }
        if self.dim_v != other.dim_v {
            return Err(Error::DimensionMismatch {
                expected: self.dim_v,
                actual: other.dim_v,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ProductOperator) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = self.clone();
        for (_, a1) in out.terms.iter_mut() {
            *a1 *= s;
        }
        out
    }

    /// `(Σ A⊗B)(Σ C⊗D) = Σ AC ⊗ BD`, compressed.
    pub fn compose(&self, other: &ProductOperator) -> Result<Self> {
        self.check_same(other)?;
        let mut out = ProductOperator::zero(&self.basis, self.dim_v);
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                out.terms.push((a.compose(c)?, b * d));
            }
        }
        Ok(out.compressed())
    }

    pub fn adjoint(&self) -> Self {
        ProductOperator {
            basis: self.basis.clone(),
            dim_v: self.dim_v,
            terms: self.terms.iter().map(|(a, b)| (a.adjoint(), b.adjoint())).collect(),
        }
    }

    /// Largest degree touched by any Fock factor.
    pub fn support_degree(&self) -> usize {
        self.terms.iter().map(|(a, _)| a.support_degree()).max().unwrap_or(0)
    }

    /// Re-express on another Fock basis with the same `n` and `λ`
    /// (padding with zeros or truncating).
    pub fn rebase(&self, target: &FockBasis) -> Result<Self> {
        let mut out = ProductOperator::zero(target, self.dim_v);
        for (a0, a1) in &self.terms {
            out.terms.push((a0.rebase(target)?, a1.clone()));
        }
        Ok(out)
    }
}

/// `π(z₀,c₀,k) = π₀(z₀,c₀)τ(k) ⊗ ρ(k)`.
pub fn pi_matrix(g: &MotionElement, basis: &FockBasis, irrep: &dyn CompactIrrep) -> Result<ProductOperator> {
    check_ambient(basis, irrep)?;
    let fock = pi0_matrix(&g.heisenberg_part(), basis)?.compose(&tau_matrix(&g.k, basis)?)?;
    ProductOperator::elementary(fock, irrep.rho(&g.k)?)
}

/// `dπ(X) = (dπ₀(v,c) + dτ(A)) ⊗ I + I ⊗ dρ(A)`.
pub fn dpi_matrix(x: &MotionAlgebraElement, basis: &FockBasis, irrep: &dyn CompactIrrep) -> Result<ProductOperator> {
    check_ambient(basis, irrep)?;
    let d = irrep.dim_v();
    let fock = dpi0_matrix(&x.heisenberg_part(), basis)?.add(&dtau_matrix(&x.a, basis)?)?;
    let mut out = ProductOperator::elementary(fock, CMatrix::identity(d, d))?;
    out.push(FockOperator::identity(basis), irrep.drho(&x.a)?)?;
    Ok(out)
}

pub(crate) fn check_ambient(basis: &FockBasis, irrep: &dyn CompactIrrep) -> Result<()> {
    if irrep.ambient_dim() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            actual: irrep.ambient_dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::{Su2Spin, U1Character};
    use crate::linalg::{c, leading_block, max_abs, I};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tau_is_unitary_homomorphism() {
        let s = Su2Spin::new(0.5).unwrap();
        let b = FockBasis::new(2, 1.0, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let k1 = s.random_element(&mut rng);
        let k2 = s.random_element(&mut rng);
        let t1 = tau_matrix(&k1, &b).unwrap();
        let t2 = tau_matrix(&k2, &b).unwrap();
        let t12 = tau_matrix(&(&k1 * &k2), &b).unwrap();
        assert!(max_abs(&(t1.matrix() * t2.matrix() - t12.matrix())) < 1e-12);
        assert!(max_abs(&(t1.matrix().adjoint() * t1.matrix() - CMatrix::identity(b.dim(), b.dim()))) < 1e-12);
    }

    #[test]
    fn dtau_is_derivative_of_tau() {
        let s = Su2Spin::new(0.5).unwrap();
        let b = FockBasis::new(2, 0.7, 4).unwrap();
        let a = s.algebra_element(&[0.4, -0.3, 0.9]);
        let h = 1e-6;
        let plus = tau_matrix(&crate::linalg::expm_skew(&(&a * c(h, 0.0))), &b).unwrap();
        let minus = tau_matrix(&crate::linalg::expm_skew(&(&a * c(-h, 0.0))), &b).unwrap();
        let fd = (plus.matrix() - minus.matrix()) / c(2.0 * h, 0.0);
        assert!(max_abs(&(fd - dtau_matrix(&a, &b).unwrap().matrix())) < 1e-8);
    }

    #[test]
    fn central_element_acts_by_character() {
        let s = Su2Spin::new(1.0).unwrap();
        let b = FockBasis::new(2, 2.0, 3).unwrap();
        let g = MotionElement::new(vec![c(0.0, 0.0); 2], 0.3, CMatrix::identity(2, 2)).unwrap();
        let p = pi_matrix(&g, &b, &s).unwrap().dense();
        let expect = CMatrix::identity(p.nrows(), p.ncols()) * C64::from_polar(1.0, 0.6);
        assert!(max_abs(&(p - expect)) < 1e-14);
        let x = MotionAlgebraElement::new(vec![c(0.0, 0.0); 2], 1.0, CMatrix::zeros(2, 2)).unwrap();
        let d = dpi_matrix(&x, &b, &s).unwrap().dense();
        assert!(max_abs(&(d - CMatrix::identity(b.dim() * 3, b.dim() * 3) * (I * 2.0))) < 1e-14);
    }

    #[test]
    fn pi_is_homomorphism_on_interior() {
        let s = Su2Spin::new(0.5).unwrap();
        let b = FockBasis::new(2, 1.0, 22).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut rand_g = || {
            let z0 = vec![c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)), c(rng.gen_range(-0.3..0.3), 0.1)];
            MotionElement::new(z0, 0.4, s.random_element(&mut rng)).unwrap()
        };
        let g = rand_g();
        let h = rand_g();
        let lhs = pi_matrix(&g.multiply(&h).unwrap(), &b, &s).unwrap().dense();
        let rhs = pi_matrix(&g, &b, &s).unwrap().dense() * pi_matrix(&h, &b, &s).unwrap().dense();
        let k = b.block_dim(4) * 2;
        assert!(max_abs(&(leading_block(&lhs, k) - leading_block(&rhs, k))) < 1e-8);
    }

    #[test]
    fn dense_round_trip() {
        let b = FockBasis::new(1, 1.0, 3).unwrap();
        let m = CMatrix::from_fn(8, 8, |i, j| c(i as f64, j as f64 * 0.5));
        let p = ProductOperator::from_dense(&b, 2, &m).unwrap();
        assert!(max_abs(&(p.dense() - &m)) < 1e-15);
        assert!(max_abs(&(p.compose(&p).unwrap().dense() - &m * &m)) < 1e-10);
    }

    #[test]
    fn u1_reduces_to_heisenberg() {
        let k = U1Character::new(0);
        let b = FockBasis::new(1, 1.0, 6).unwrap();
        let g = MotionElement::new(vec![c(0.2, 0.1)], 0.3, CMatrix::identity(1, 1)).unwrap();
        let p = pi_matrix(&g, &b, &k).unwrap().dense();
        let p0 = pi0_matrix(&g.heisenberg_part(), &b).unwrap();
        assert!(max_abs(&(p - p0.matrix())) < 1e-15);
    }
}
