//! The product calculi `S`, `W` on `ℂⁿ × o(φ₀)`, the quantizer
//! `Ω(z,φ) = Ω₀(z) ⊗ ω₁(φ)` and the moment map `Ψ`.

use std::sync::Arc;

use crate::berezin::{berezin_symbol, BerezinOptions};
use crate::compact::{CompactIrrep, CompactSwc, KDual, OrbitPoint};
use crate::diffop::DiffOperator;
use crate::error::{Error, Result};
use crate::fock::{FockBasis, FockOperator};
use crate::heisenberg::parity_matrix;
use crate::linalg::{mat_vec, trace, trace_product, CMatrix, C64, I};
use crate::quadrature::PhaseSpaceGrid;
use crate::weyl::{kernel_integral, quantizer0, shape_grid, weyl_symbol, weyl_symbol_dpi0, weyl_symbol_regularized, Kernel, KernelShape};

use super::group::{MotionAlgebraElement, MotionDual, MotionElement};
use super::rep::{check_ambient, pi_matrix, ProductOperator};

/// A motion group `G = H_n ⋊ K` at a fixed central character `λ`, with a
/// chosen irrep of `K` and its built `w₁`.
#[derive(Clone, Debug)]
pub struct MotionGroup {
    lambda: f64,
    irrep: Arc<dyn CompactIrrep>,
    swc: CompactSwc,
}

impl MotionGroup {
    pub fn new(irrep: Arc<dyn CompactIrrep>, lambda: f64, sphere_order: usize) -> Result<Self> {
        if !(lambda > 0.0) {
            return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
        }
        let swc = CompactSwc::build(irrep.clone(), sphere_order)?;
        Ok(MotionGroup { lambda, irrep, swc })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn n(&self) -> usize {
        self.irrep.ambient_dim()
    }

    pub fn irrep(&self) -> &dyn CompactIrrep {
        self.irrep.as_ref()
    }

    pub fn swc(&self) -> &CompactSwc {
        &self.swc
    }

    pub fn basis(&self, cutoff: usize) -> Result<FockBasis> {
        FockBasis::new(self.n(), self.lambda, cutoff)
    }

    fn check_basis(&self, basis: &FockBasis) -> Result<()> {
        check_ambient(basis, self.irrep.as_ref())?;
        if basis.lambda() != self.lambda {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    fn check_operator(&self, a: &ProductOperator) -> Result<()> {
        self.check_basis(a.basis())?;
        if a.dim_v() != self.irrep.dim_v() {
            return Err(Error::DimensionMismatch {
                expected: self.irrep.dim_v(),
                actual: a.dim_v(),
            });
        }
        Ok(())
    }

    /// `g·(z,φ) = (kz − iλz₀, Ad*(k)φ)`.
    pub fn act(&self, g: &MotionElement, z: &[C64], phi: &OrbitPoint) -> Result<(Vec<C64>, OrbitPoint)> {
        g.act(z, phi, self.lambda, self.irrep.as_ref())
    }

    /// The section `g_{(z,φ)} = (iz/λ, 0, k_φ)`.
    pub fn section(&self, z: &[C64], phi: &OrbitPoint) -> Result<MotionElement> {
        let k = self.irrep.section(phi)?;
        MotionElement::new(z.iter().map(|w| I * w / self.lambda).collect(), 0.0, k)
    }

    /// `S(Σ A₀ⁱ⊗A₁ⁱ)(z,φ) = Σ S₀(A₀ⁱ)(z) s₁(A₁ⁱ)(φ)`.
    pub fn berezin_s(&self, a: &ProductOperator, z: &[C64], phi: &OrbitPoint, opts: BerezinOptions) -> Result<C64> {
        self.check_operator(a)?;
        let mut acc = C64::new(0.0, 0.0);
        for (a0, a1) in a.terms() {
            acc += berezin_symbol(a0, z, opts)?.value * self.irrep.berezin_symbol_k(a1, phi)?;
        }
        Ok(acc)
    }

    /// `S(dπ(X))(z,φ) = iλc + (i/2)(v̄z + v z̄) − (1/2λ) z̄(Az) + i⟨φ,A⟩`.
    pub fn symbol_dpi_closed(&self, x: &MotionAlgebraElement, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        let heis = weyl_symbol_dpi0(&x.heisenberg_part(), z, self.lambda)?;
        Ok(heis - quadratic(&x.a, z) / (2.0 * self.lambda) + I * self.irrep.pair(&phi.as_dual(), &x.a))
    }

    /// `Ψ(z,φ) = (−iz, λ, φ − (1/2λ) z×z)_*`.
    pub fn psi(&self, z: &[C64], phi: &OrbitPoint) -> Result<MotionDual> {
        let zz = self.irrep.cross(z, z)?;
        Ok(MotionDual {
            u: z.iter().map(|w| -I * w).collect(),
            d: self.lambda,
            phi: phi.as_dual().plus(&zz.scaled(-0.5 / self.lambda)),
        })
    }

    /// `Ψ⁻¹(u, λ, ψ) = (iu, ψ + (1/2λ)(iu)×(iu))`, rejecting points off the
    /// chart by more than `tol`.
    pub fn psi_inverse(&self, xi: &MotionDual, tol: f64) -> Result<(Vec<C64>, OrbitPoint)> {
        if (xi.d - self.lambda).abs() > tol {
            return Err(Error::OffOrbit(format!("d-component {} differs from lambda {}", xi.d, self.lambda)));
        }
        let z: Vec<C64> = xi.u.iter().map(|u| I * u).collect();
        let zz = self.irrep.cross(&z, &z)?;
        let phi = OrbitPoint::from_dual(&xi.phi.plus(&zz.scaled(0.5 / self.lambda)));
        if !self.irrep.on_orbit(&phi, tol) {
            return Err(Error::OffOrbit(format!(
                "recovered {phi} is off the orbit of radius {}",
                self.irrep.orbit_radius()
            )));
        }
        Ok((z, phi))
    }

    /// `Ω(z,φ) = Ω₀(z) ⊗ ω₁(φ)`.
    pub fn quantizer(&self, z: &[C64], phi: &OrbitPoint, basis: &FockBasis) -> Result<ProductOperator> {
        self.check_basis(basis)?;
        ProductOperator::elementary(quantizer0(z, basis)?, self.swc.quantizer1(phi)?)
    }

    /// `R = R₀ ⊗ ω₁(φ₀)`.
    pub fn base_quantizer(&self, basis: &FockBasis) -> Result<ProductOperator> {
        self.check_basis(basis)?;
        ProductOperator::elementary(parity_matrix(basis), self.swc.quantizer1(&self.irrep.base_point())?)
    }

    /// `π(g) A π(g)⁻¹` with `π(g)` compressed to `basis`.
    pub fn conjugate(&self, g: &MotionElement, a: &ProductOperator) -> Result<ProductOperator> {
        self.check_operator(a)?;
        let p = pi_matrix(g, a.basis(), self.irrep.as_ref())?;
        let pinv = pi_matrix(&g.inverse(), a.basis(), self.irrep.as_ref())?;
        p.compose(a)?.compose(&pinv)
    }

    /// `Ω(z,φ) = π(g_{(z,φ)}) R π(g_{(z,φ)})⁻¹`, compressed to `basis`; only
    /// the interior block is accurate.
    pub fn quantizer_conjugated(&self, z: &[C64], phi: &OrbitPoint, basis: &FockBasis) -> Result<ProductOperator> {
        let g = self.section(z, phi)?;
        self.conjugate(&g, &self.base_quantizer(basis)?)
    }

    /// `W(Σ A₀ⁱ⊗A₁ⁱ)(z,φ) = Σ W₀(A₀ⁱ)(z) w₁(A₁ⁱ)(φ)`.
    pub fn w_symbol(&self, a: &ProductOperator, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        self.check_operator(a)?;
        let omega1 = self.swc.quantizer1(phi)?;
        let mut acc = C64::new(0.0, 0.0);
        for (a0, a1) in a.terms() {
            acc += weyl_symbol(a0, z)? * trace_product(a1, &omega1);
        }
        Ok(acc)
    }

    /// `Tr(A Ω(z,φ))` with both operators assembled densely.
    pub fn w_symbol_trace(&self, a: &ProductOperator, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        self.check_operator(a)?;
        let q = self.quantizer(z, phi, a.basis())?;
        Ok(trace_product(&a.dense(), &q.dense()))
    }

    /// `W(A)(z,φ) = 2ⁿ ∫ w₁(K_A(w,2z−w))(φ) e^{(−|z|²+zw̄−½|w|²)/λ} dμ_λ(w)`
    /// with the operator-valued kernel `K_A(z,w) = Σ k_{A₀ⁱ}(z,w) A₁ⁱ`.
    pub fn w_symbol_integral(&self, a: &ProductOperator, z: &[C64], phi: &OrbitPoint, grid: &PhaseSpaceGrid) -> Result<C64> {
        self.check_operator(a)?;
        let omega1 = self.swc.quantizer1(phi)?;
        let shape = product_shape(a);
        let d = a.dim_v();
        kernel_integral(self.n(), self.lambda, shape, z, grid, |w, reflected| {
            let mut k = CMatrix::zeros(d, d);
            for (a0, a1) in a.terms() {
                k += a1 * a0.kernel(w, reflected);
            }
            trace_product(&k, &omega1)
        })
    }

    /// The grid on which [`w_symbol_integral`](Self::w_symbol_integral) is exact.
    pub fn integral_grid(&self, a: &ProductOperator, z: &[C64]) -> Result<PhaseSpaceGrid> {
        shape_grid(product_shape(a), z, self.lambda)
    }

    /// `W(dπ(X))(z,φ) = iλc + (i/2)(v̄z + vz̄) − (1/2λ) z̄(Az) + ½Tr(A) + w₁(dρ(A))(φ)`.
    pub fn w_dpi_closed(&self, x: &MotionAlgebraElement, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        let heis = weyl_symbol_dpi0(&x.heisenberg_part(), z, self.lambda)?;
        let compact = self.swc.w1(&self.irrep.drho(&x.a)?, phi)?;
        Ok(heis - quadratic(&x.a, z) / (2.0 * self.lambda) + 0.5 * trace(&x.a) + compact)
    }

    /// The variant with constant `(1/2λ)Tr(A)`, kept for comparison.
    pub fn w_dpi_closed_printed_constant(&self, x: &MotionAlgebraElement, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        let base = self.w_dpi_closed(x, z, phi)?;
        Ok(base - 0.5 * trace(&x.a) + trace(&x.a) / (2.0 * self.lambda))
    }

    /// `W₀(dπ₀(v,c))(z) + W₀(dτ(A))(z) + w₁(dρ(A))(φ)`, with the Fock terms
    /// from the closed-form differential-operator symbols.
    pub fn w_dpi_decomposed(&self, x: &MotionAlgebraElement, z: &[C64], phi: &OrbitPoint) -> Result<C64> {
        let fock = DiffOperator::dpi0(&x.heisenberg_part(), self.lambda).plus(&DiffOperator::dtau(&x.a, self.lambda));
        let compact = self.swc.w1(&self.irrep.drho(&x.a)?, phi)?;
        Ok(fock.weyl_symbol().eval(z) + compact)
    }

    /// `W(dπ(X))(z,φ)` by the regularized trace pairing: the Fock factors
    /// are paired with `Ω₀(z)` through [`weyl_symbol_regularized`] on
    /// `basis`, the compact factors with `ω₁(φ)`.
    pub fn w_dpi_trace(&self, x: &MotionAlgebraElement, z: &[C64], phi: &OrbitPoint, basis: &FockBasis, terms: usize) -> Result<C64> {
        self.check_basis(basis)?;
        let a = super::rep::dpi_matrix(x, basis, self.irrep.as_ref())?;
        let omega1 = self.swc.quantizer1(phi)?;
        let mut acc = C64::new(0.0, 0.0);
        for (a0, a1) in a.terms() {
            acc += weyl_symbol_regularized(a0, z, terms)? * trace_product(a1, &omega1);
        }
        Ok(acc)
    }

    /// `𝒲(A)(ξ) = W(A)(Ψ⁻¹(ξ))`.
    pub fn cal_w(&self, a: &ProductOperator, xi: &MotionDual, tol: f64) -> Result<C64> {
        let (z, phi) = self.psi_inverse(xi, tol)?;
        self.w_symbol(a, &z, &phi)
    }

    /// The base point `ξ₀ = (0, λ, φ₀)_*`.
    pub fn xi0(&self) -> MotionDual {
        MotionDual {
            u: vec![C64::new(0.0, 0.0); self.n()],
            d: self.lambda,
            phi: self.irrep.base_point().as_dual(),
        }
    }

    pub fn zero_dual(&self) -> KDual {
        KDual::zero(self.irrep.algebra_basis().len())
    }
}

/// `z̄(Az) = Σ z̄ᵢ (Az)ᵢ`.
fn quadratic(a: &CMatrix, z: &[C64]) -> C64 {
    z.iter().zip(mat_vec(a, z)).map(|(zi, azi)| zi.conj() * azi).sum()
}

fn product_shape(a: &ProductOperator) -> KernelShape {
    let mut degree = 0;
    let mut full = false;
    for (a0, _) in a.terms() {
        if let KernelShape::Polynomial { degree: d, full_support } = a0.shape() {
            degree = degree.max(d);
            full |= full_support;
        }
    }
    KernelShape::Polynomial {
        degree,
        full_support: full,
    }
}

/// `A₀ ⊗ A₁` helper for callers holding a Fock operator and a `V` matrix.
pub fn tensor(a0: FockOperator, a1: CMatrix) -> Result<ProductOperator> {
    ProductOperator::elementary(a0, a1)
}
