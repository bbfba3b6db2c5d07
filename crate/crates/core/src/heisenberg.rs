//! The Heisenberg group `G₀ = ℂⁿ × ℝ`, its Bargmann–Fock representation and
//! the coadjoint orbit map `Φ_λ`.

use crate::error::{Error, Result};
use crate::fock::{binomial, FockBasis, FockOperator, MultiIndex};
use crate::linalg::{op_norm, CMatrix, C64, I};

fn check_dims(a: &[C64], b: &[C64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(())
}

/// `ω(z,z') = (i/2)(z z̄' − z̄ z')`, which equals `−Im Σ zₖ z̄'ₖ`.
pub fn omega(z: &[C64], zp: &[C64]) -> Result<f64> {
    check_dims(z, zp)?;
    Ok(omega_unchecked(z, zp))
}

pub(crate) fn omega_unchecked(z: &[C64], zp: &[C64]) -> f64 {
    -z.iter().zip(zp).map(|(a, b)| a * b.conj()).sum::<C64>().im
}

/// Group element `(z₀, c₀)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergElement {
    pub z0: Vec<C64>,
    pub c0: f64,
}

impl HeisenbergElement {
    pub fn new(z0: Vec<C64>, c0: f64) -> Self {
        HeisenbergElement { z0, c0 }
    }

    pub fn identity(n: usize) -> Self {
        HeisenbergElement {
            z0: vec![C64::new(0.0, 0.0); n],
            c0: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.z0.len()
    }

    pub fn inverse(&self) -> Self {
        HeisenbergElement {
            z0: self.z0.iter().map(|z| -z).collect(),
            c0: -self.c0,
        }
    }

    /// The section `g_z = (iz/λ, 0)`, with `g_z · 0 = z`.
    pub fn section(z: &[C64], lambda: f64) -> Self {
        HeisenbergElement {
            z0: z.iter().map(|w| I * w / lambda).collect(),
            c0: 0.0,
        }
    }

    /// Action on phase space `g·z = z − iλz₀`.
    pub fn act(&self, z: &[C64], lambda: f64) -> Vec<C64> {
        z.iter().zip(&self.z0).map(|(w, a)| w - I * lambda * a).collect()
    }
}

/// `(z,c)·(z',c') = (z+z', c+c'+½ω(z,z'))`.
pub fn g0_multiply(g: &HeisenbergElement, h: &HeisenbergElement) -> Result<HeisenbergElement> {
    check_dims(&g.z0, &h.z0)?;
    Ok(HeisenbergElement {
        z0: g.z0.iter().zip(&h.z0).map(|(a, b)| a + b).collect(),
        c0: g.c0 + h.c0 + 0.5 * omega_unchecked(&g.z0, &h.z0),
    })
}

/// Lie algebra element `(v, c) = Σ (Re vₖ)Xₖ + (Im vₖ)Yₖ + cZ`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergAlgebraElement {
    pub v: Vec<C64>,
    pub c: f64,
}

impl HeisenbergAlgebraElement {
    pub fn new(v: Vec<C64>, c: f64) -> Self {
        HeisenbergAlgebraElement { v, c }
    }

    /// `X_k = (e_k, 0)`.
    pub fn x(n: usize, k: usize) -> Self {
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[k] = C64::new(1.0, 0.0);
        HeisenbergAlgebraElement { v, c: 0.0 }
    }

    /// `Y_k = (i e_k, 0)`.
    pub fn y(n: usize, k: usize) -> Self {
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[k] = I;
        HeisenbergAlgebraElement { v, c: 0.0 }
    }

    /// `Z = (0, 1)`.
    pub fn z(n: usize) -> Self {
        HeisenbergAlgebraElement {
            v: vec![C64::new(0.0, 0.0); n],
            c: 1.0,
        }
    }

    /// `[(v,c),(v',c')] = (0, ω(v,v'))`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        Ok(HeisenbergAlgebraElement {
            v: vec![C64::new(0.0, 0.0); self.v.len()],
            c: omega(&self.v, &other.v)?,
        })
    }
}

/// `(α, γ)_*` with `⟨(α,γ)_*, (v,c)⟩ = ω(α,v) + γc`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualElement0 {
    pub alpha: Vec<C64>,
    pub gamma: f64,
}

impl DualElement0 {
    pub fn pair(&self, x: &HeisenbergAlgebraElement) -> Result<f64> {
        Ok(omega(&self.alpha, &x.v)? + self.gamma * x.c)
    }

    /// `Ad*(g)(α,γ)_* = (α − γz₀, γ)_*`.
    pub fn coadjoint(&self, g: &HeisenbergElement) -> Self {
        DualElement0 {
            alpha: self.alpha.iter().zip(&g.z0).map(|(a, z)| a - self.gamma * z).collect(),
            gamma: self.gamma,
        }
    }
}

/// `Φ_λ(z) = (−iz, λ)_*`.
pub fn phi_lambda(z: &[C64], lambda: f64) -> DualElement0 {
    DualElement0 {
        alpha: z.iter().map(|w| -I * w).collect(),
        gamma: lambda,
    }
}

/// Compression `P_N π₀(g) P_N` of
/// `(π₀(g)f)(z) = exp(iλc₀ + ½i z̄₀z − (λ/4)|z₀|²) f(z + iλz₀)`.
///
/// Each entry is an exact finite sum: the shift `f(z + iλz₀)` is expanded
/// binomially and the multiplier series `exp(½i z̄₀ z)` contributes only
/// the degrees needed to reach the target monomial.
pub fn pi0_matrix(g: &HeisenbergElement, basis: &FockBasis) -> Result<FockOperator> {
    if g.n() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            actual: g.n(),
        });
    }
    let lambda = basis.lambda();
    let n = basis.n();
    let shift: Vec<C64> = g.z0.iter().map(|z| I * lambda * z).collect();
    let mult: Vec<C64> = g.z0.iter().map(|z| 0.5 * I * z.conj()).collect();
    let z0_sq: f64 = g.z0.iter().map(|z| z.norm_sqr()).sum();
    let prefactor = C64::from_polar(1.0, lambda * g.c0) * (-0.25 * lambda * z0_sq).exp();
    let dim = basis.dim();
    let mut m = CMatrix::zeros(dim, dim);
    for (j, q) in basis.indices().iter().enumerate() {
        let lq = basis.ln_norm(j);
        for r in q.below() {
            let shift_pow = q.checked_sub(&r).unwrap().monomial(&shift);
            let ln_binom: f64 = q
                .entries()
                .iter()
                .zip(r.entries())
                .map(|(&a, &b)| binomial(a, b).ln())
                .sum();
            // target p = r + m for every m with |p| ≤ N
            let room = basis.cutoff() - r.degree();
            for dm in 0..=room {
                for step in MultiIndex::of_degree(n, dm) {
                    let p = r.add(&step);
                    let i = basis.position(&p).expect("degree within cutoff");
                    let ln_w = ln_binom - step.ln_factorial() + basis.ln_norm(i) - lq;
                    m[(i, j)] += shift_pow * step.monomial(&mult) * ln_w.exp();
                }
            }
        }
    }
    FockOperator::new(basis, m * prefactor)
}

/// Matrix of `(dπ₀(v,c)f)(z) = i(λc + ½v̄z)f(z) + df_z(iλv)`.
///
/// The raising part `½i v̄z` out of the top degree is dropped; every other
/// entry is exact.
pub fn dpi0_matrix(x: &HeisenbergAlgebraElement, basis: &FockBasis) -> Result<FockOperator> {
    if x.v.len() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            actual: x.v.len(),
        });
    }
    let lambda = basis.lambda();
    let n = basis.n();
    let dim = basis.dim();
    let mut m = CMatrix::identity(dim, dim) * (I * lambda * x.c);
    for (j, q) in basis.indices().iter().enumerate() {
        for k in 0..n {
            let qk = q.entries()[k] as f64;
            let up = q.add(&MultiIndex::unit(n, k));
            if let Some(i) = basis.position(&up) {
                m[(i, j)] += 0.5 * I * x.v[k].conj() * (2.0 * lambda * (qk + 1.0)).sqrt();
            }
            if let Some(down) = q.checked_sub(&MultiIndex::unit(n, k)) {
                let i = basis.position(&down).unwrap();
                m[(i, j)] += I * lambda * x.v[k] * (qk / (2.0 * lambda)).sqrt();
            }
        }
    }
    FockOperator::new(basis, m)
}

/// `(R₀f)(z) = 2ⁿ f(−z)`: diagonal `2ⁿ(−1)^{|p|}`.
pub fn parity_matrix(basis: &FockBasis) -> FockOperator {
    let dim = basis.dim();
    let scale = 2f64.powi(basis.n() as i32);
    let m = CMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            let sign = if basis.index(i).degree() % 2 == 0 { 1.0 } else { -1.0 };
            C64::new(scale * sign, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    FockOperator::new(basis, m).expect("square of basis dimension")
}

/// `‖P_d (π₀(g)†π₀(g) − I) P_d‖` on the degree-`≤ probe_degree` block.
pub fn unitarity_defect(g: &HeisenbergElement, basis: &FockBasis, probe_degree: usize) -> Result<f64> {
    if probe_degree > basis.cutoff() {
        return Err(Error::InvalidParameter(format!(
            "probe degree {probe_degree} exceeds cutoff {}",
            basis.cutoff()
        )));
    }
    let m = pi0_matrix(g, basis)?;
    let k = basis.block_dim(probe_degree);
    let cols = m.matrix().columns(0, k);
    let gram = cols.adjoint() * cols - CMatrix::identity(k, k);
    Ok(op_norm(&gram))
}

/// Displacement convergence scale `λ|z₀|/2`, used to pick certified cutoffs.
pub fn displacement_scale(g: &HeisenbergElement, lambda: f64) -> f64 {
    0.5 * lambda * g.z0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{coherent_state, FockVector};
    use crate::linalg::{c, max_abs, re};

    fn basis(n: usize, lambda: f64, cutoff: usize) -> FockBasis {
        FockBasis::new(n, lambda, cutoff).unwrap()
    }

    #[test]
    fn omega_examples() {
        let z = [c(0.3, -0.4), c(1.2, 0.5)];
        let w = [c(-0.7, 0.1), c(0.2, 0.9)];
        assert_eq!(omega(&z, &z).unwrap(), 0.0);
        assert!((omega(&[re(1.0)], &[c(0.0, 1.0)]).unwrap() - 1.0).abs() < 1e-15);
        assert!((omega(&z, &w).unwrap() + omega(&w, &z).unwrap()).abs() < 1e-15);
        assert!(omega(&z, &w[..1]).is_err());
    }

    #[test]
    fn group_law() {
        let g = HeisenbergElement::new(vec![c(0.2, 0.7)], 0.4);
        let e = HeisenbergElement::identity(1);
        assert_eq!(g0_multiply(&g, &e).unwrap(), g);
        assert_eq!(g0_multiply(&g, &g.inverse()).unwrap(), e);
        let a = HeisenbergElement::new(vec![re(1.0)], 0.0);
        let b = HeisenbergElement::new(vec![c(0.0, 1.0)], 0.0);
        let ab = g0_multiply(&a, &b).unwrap();
        assert_eq!(ab.z0, vec![c(1.0, 1.0)]);
        assert!((ab.c0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn central_elements_act_by_character() {
        let b = basis(2, 0.7, 5);
        let g = HeisenbergElement::new(vec![re(0.0), re(0.0)], 1.3);
        let m = pi0_matrix(&g, &b).unwrap();
        let expected = CMatrix::identity(b.dim(), b.dim()) * C64::from_polar(1.0, 0.7 * 1.3);
        assert!(max_abs(&(m.matrix() - expected)) < 1e-15);
        assert_eq!(unitarity_defect(&g, &b, 5).unwrap(), 0.0);
        let id = pi0_matrix(&HeisenbergElement::identity(2), &b).unwrap();
        assert!(max_abs(&(id.matrix() - CMatrix::identity(b.dim(), b.dim()))) == 0.0);
    }

    #[test]
    fn vacuum_column_is_scaled_coherent_state() {
        let lambda = 1.3;
        let b = basis(1, lambda, 12);
        let z0 = c(0.3, -0.2);
        let c0 = 0.6;
        let g = HeisenbergElement::new(vec![z0], c0);
        let m = pi0_matrix(&g, &b).unwrap();
        // π₀(g)ê₀ = exp(iλc₀ − λ|z₀|²/4) exp(½i z̄₀ w) and exp(½i z̄₀ w) = e_ζ with ζ̄ = iλ z̄₀
        let zeta = [(I * lambda * z0.conj()).conj()];
        let e = coherent_state(&zeta, &b).unwrap();
        let scalar = C64::from_polar(1.0, lambda * c0) * (-0.25 * lambda * z0.norm_sqr()).exp();
        for i in 0..b.dim() {
            assert!((m.matrix()[(i, 0)] - scalar * e.coeffs()[i]).norm() < 1e-14);
        }
    }

    #[test]
    fn dpi0_examples() {
        let lambda = 1.0;
        let b = basis(1, lambda, 6);
        let z = dpi0_matrix(&HeisenbergAlgebraElement::z(1), &b).unwrap();
        assert!(max_abs(&(z.matrix() - CMatrix::identity(7, 7) * (I * lambda))) < 1e-15);
        let x1 = dpi0_matrix(&HeisenbergAlgebraElement::x(1, 0), &b).unwrap();
        assert!((x1.matrix()[(1, 0)] - 0.5 * I * 2f64.sqrt()).norm() < 1e-15);
        let m = x1.matrix();
        assert!(max_abs(&(m.adjoint() + m)) < 1e-14);
    }

    #[test]
    fn canonical_commutation_on_interior_block() {
        for lambda in [0.5, 1.0, 2.0] {
            let b = basis(2, lambda, 7);
            for k in 0..2 {
                let x = dpi0_matrix(&HeisenbergAlgebraElement::x(2, k), &b).unwrap();
                let y = dpi0_matrix(&HeisenbergAlgebraElement::y(2, k), &b).unwrap();
                let comm = x.matrix() * y.matrix() - y.matrix() * x.matrix();
                let kdim = b.block_dim(5);
                let blk = comm.view((0, 0), (kdim, kdim)).into_owned();
                let target = CMatrix::identity(kdim, kdim) * (I * lambda);
                assert!(max_abs(&(blk - target)) < 1e-13);
            }
        }
    }

    #[test]
    fn parity_examples() {
        let b = basis(1, 1.0, 5);
        let r = parity_matrix(&b);
        let diag: Vec<f64> = (0..6).map(|i| r.matrix()[(i, i)].re).collect();
        assert_eq!(diag, vec![2.0, -2.0, 2.0, -2.0, 2.0, -2.0]);
        let b2 = basis(2, 1.0, 4);
        let r2 = parity_matrix(&b2);
        assert_eq!(r2.matrix()[(0, 0)], re(4.0));
        let sq = r2.matrix() * r2.matrix();
        assert!(max_abs(&(sq - CMatrix::identity(b2.dim(), b2.dim()) * re(16.0))) == 0.0);
    }

    #[test]
    fn parity_grading() {
        let b = basis(2, 0.8, 6);
        let r = parity_matrix(&b);
        let z = dpi0_matrix(&HeisenbergAlgebraElement::z(2), &b).unwrap();
        assert!(max_abs(&(r.matrix() * z.matrix() - z.matrix() * r.matrix())) < 1e-15);
        let x = dpi0_matrix(&HeisenbergAlgebraElement::new(vec![c(0.3, 0.5), c(-1.0, 0.2)], 0.0), &b).unwrap();
        assert!(max_abs(&(r.matrix() * x.matrix() + x.matrix() * r.matrix())) < 1e-14);
    }

    #[test]
    fn phi_lambda_examples() {
        let lambda = 1.7;
        let base = phi_lambda(&[re(0.0)], lambda);
        assert_eq!(base.gamma, lambda);
        assert!(base.alpha[0].norm() == 0.0);
        let z = [c(0.4, -0.9)];
        let phi = phi_lambda(&z, lambda);
        assert!((phi.pair(&HeisenbergAlgebraElement::z(1)).unwrap() - lambda).abs() < 1e-15);
        assert!((phi.pair(&HeisenbergAlgebraElement::x(1, 0)).unwrap() - 0.4).abs() < 1e-15);
        assert!((phi.pair(&HeisenbergAlgebraElement::y(1, 0)).unwrap() + 0.9).abs() < 1e-15);
    }

    #[test]
    fn phi_lambda_is_equivariant() {
        let lambda = 0.6;
        let z = [c(0.4, -0.9), c(0.1, 0.3)];
        let g = HeisenbergElement::new(vec![c(1.0, 0.5), c(-0.3, 0.2)], 0.7);
        let lhs = phi_lambda(&g.act(&z, lambda), lambda);
        let rhs = phi_lambda(&z, lambda).coadjoint(&g);
        for (a, b) in lhs.alpha.iter().zip(&rhs.alpha) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn section_moves_origin() {
        let z = [c(0.4, -0.9)];
        let g = HeisenbergElement::section(&z, 1.5);
        let moved = g.act(&[re(0.0)], 1.5);
        assert!((moved[0] - z[0]).norm() < 1e-15);
    }

    #[test]
    fn defect_decreases_with_cutoff() {
        let g = HeisenbergElement::new(vec![re(0.3)], 0.0);
        let defects: Vec<f64> = [8, 12, 16]
            .iter()
            .map(|&n| unitarity_defect(&g, &basis(1, 1.0, n), 4).unwrap())
            .collect();
        assert!(defects[0] > defects[1] && defects[1] > defects[2], "{defects:?}");
        assert!(defects[2] < 1e-10);
    }

    #[test]
    fn homomorphism_up_to_truncation() {
        let lambda = 1.0;
        let g = HeisenbergElement::new(vec![c(0.3, 0.1)], 0.2);
        let h = HeisenbergElement::new(vec![c(-0.1, 0.35)], -0.4);
        let gh = g0_multiply(&g, &h).unwrap();
        let mut last = f64::INFINITY;
        for cutoff in [10, 16, 24] {
            let b = basis(1, lambda, cutoff);
            let lhs = pi0_matrix(&g, &b).unwrap().compose(&pi0_matrix(&h, &b).unwrap()).unwrap();
            let rhs = pi0_matrix(&gh, &b).unwrap();
            let err = op_norm(&(lhs.block(4) - rhs.block(4)));
            assert!(err < last.max(1e-13), "{err} after {last}");
            last = err;
        }
        assert!(last < 1e-12);
    }

    #[test]
    fn pi0_acts_on_functions_as_defined() {
        let lambda = 0.9;
        let b = basis(1, lambda, 30);
        let g = HeisenbergElement::new(vec![c(0.25, -0.15)], 0.3);
        let m = pi0_matrix(&g, &b).unwrap();
        let f = FockVector::basis_vector(&b, &MultiIndex::new(vec![2])).unwrap();
        let pf = m.apply(&f).unwrap();
        let z = [c(0.3, 0.4)];
        let shifted = [z[0] + I * lambda * g.z0[0]];
        let expected = (I * lambda * g.c0 + 0.5 * I * g.z0[0].conj() * z[0] - 0.25 * lambda * g.z0[0].norm_sqr()).exp()
            * crate::fock::evaluate(&f, &shifted).unwrap();
        assert!((crate::fock::evaluate(&pf, &z).unwrap() - expected).norm() < 1e-13);
    }
}
