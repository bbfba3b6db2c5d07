//! The compact factor `K`: irreducible representations `ρ` on `V`, the
//! coadjoint orbit `o(φ₀)`, the Berezin calculus `s₁` and its polar factor
//! `w₁`.
//!
//! Implementations of [`CompactIrrep`] are registered by name in
//! [`IrrepRegistry`] so callers can select `K` at run time.

mod su2;
mod swc;
mod u1;

use std::fmt;
use std::sync::Arc;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::heisenberg::omega;
use crate::linalg::{mat_vec, CMatrix, CVector, C64};

pub use su2::{so3_image, su2_rotation, Su2Spin};
pub use swc::CompactSwc;
pub use u1::U1Character;

/// A functional on `𝔨`, stored by its values on [`CompactIrrep::algebra_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct KDual {
    pub coords: Vec<f64>,
}

impl KDual {
    pub fn zero(dim: usize) -> Self {
        KDual { coords: vec![0.0; dim] }
    }

    pub fn scaled(&self, s: f64) -> Self {
        KDual {
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    pub fn plus(&self, other: &KDual) -> Self {
        KDual {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &KDual) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// A point of the coadjoint orbit `o(φ₀) ⊂ 𝔨*`, in the same coordinates as
/// [`KDual`].
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitPoint {
    pub coords: Vec<f64>,
}

impl OrbitPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        OrbitPoint { coords }
    }

    pub fn as_dual(&self) -> KDual {
        KDual {
            coords: self.coords.clone(),
        }
    }

    pub fn from_dual(d: &KDual) -> Self {
        OrbitPoint {
            coords: d.coords.clone(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.as_dual().norm()
    }

    pub fn distance(&self, other: &OrbitPoint) -> f64 {
        self.as_dual().distance(&other.as_dual())
    }
}

impl fmt::Display for OrbitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| format!("{x}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Orbit points with weights for the invariant measure `ν`.
#[derive(Clone, Debug)]
pub struct OrbitGrid {
    pub points: Vec<OrbitPoint>,
    pub weights: Vec<f64>,
}

impl OrbitGrid {
    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate<F: FnMut(&OrbitPoint) -> C64>(&self, mut f: F) -> C64 {
        let terms: Vec<C64> = self.points.iter().zip(&self.weights).map(|(p, &w)| f(p) * w).collect();
        crate::linalg::pairwise_sum(&terms)
    }
}

/// An irreducible unitary representation of a compact `K ⊂ U(n)`, together
/// with the coadjoint orbit it is attached to.
///
/// Group elements are `n × n` unitary matrices acting on `ℂⁿ`; algebra
/// elements are anti-Hermitian `n × n` matrices.
pub trait CompactIrrep: Send + Sync + fmt::Debug {
    /// Registry name.
    fn name(&self) -> &'static str;
    /// Human-readable label including parameters.
    fn label(&self) -> String;
    /// The `n` of `ℂⁿ` on which `K` acts.
    fn ambient_dim(&self) -> usize;
    fn dim_v(&self) -> usize;
    /// A basis of `𝔨`, orthogonal for the trace form.
    fn algebra_basis(&self) -> Vec<CMatrix>;
    fn rho(&self, k: &CMatrix) -> Result<CMatrix>;
    fn drho(&self, a: &CMatrix) -> Result<CMatrix>;
    /// The highest-weight functional `φ₀`.
    fn base_point(&self) -> OrbitPoint;
    fn orbit_radius(&self) -> f64;
    /// A unit vector `v_φ` with `s₁(A)(φ) = ⟨A v_φ, v_φ⟩`.
    fn coherent_vector(&self, phi: &OrbitPoint) -> Result<CVector>;
    /// The section `φ ↦ k_φ` with `Ad*(k_φ)φ₀ = φ`.
    fn section(&self, phi: &OrbitPoint) -> Result<CMatrix>;
    /// Quadrature on the orbit for `ν` with total mass `dim V`, exact for
    /// orbit polynomials of degree `≤ order`.
    fn orbit_grid(&self, order: usize) -> Result<OrbitGrid>;
    /// The minimal orbit-grid order for which `w₁` is built exactly.
    fn min_grid_order(&self) -> usize;
    fn random_element(&self, rng: &mut dyn RngCore) -> CMatrix;
    fn random_point(&self, rng: &mut dyn RngCore) -> OrbitPoint;

    /// Coordinates of `A ∈ 𝔨` in [`algebra_basis`](Self::algebra_basis).
    fn algebra_coords(&self, a: &CMatrix) -> Vec<f64> {
        self.algebra_basis()
            .iter()
            .map(|t| {
                let num = (t.adjoint() * a).trace();
                let den = (t.adjoint() * t).trace();
                (num / den).re
            })
            .collect()
    }

    fn algebra_element(&self, coords: &[f64]) -> CMatrix {
        let n = self.ambient_dim();
        let mut a = CMatrix::zeros(n, n);
        for (t, &x) in self.algebra_basis().iter().zip(coords) {
            a += t * C64::new(x, 0.0);
        }
        a
    }

    /// `⟨φ, A⟩`.
    fn pair(&self, phi: &KDual, a: &CMatrix) -> f64 {
        phi.coords.iter().zip(self.algebra_coords(a)).map(|(x, y)| x * y).sum()
    }

    /// `⟨Ad*(k)φ, A⟩ = ⟨φ, k⁻¹ A k⟩`.
    fn coadjoint_dual(&self, k: &CMatrix, phi: &KDual) -> KDual {
        let kinv = k.adjoint();
        KDual {
            coords: self
                .algebra_basis()
                .iter()
                .map(|t| self.pair(phi, &(&kinv * t * k)))
                .collect(),
        }
    }

    fn coadjoint(&self, k: &CMatrix, phi: &OrbitPoint) -> OrbitPoint {
        OrbitPoint::from_dual(&self.coadjoint_dual(k, &phi.as_dual()))
    }

    /// `v × u ∈ 𝔨*`, `⟨v × u, A⟩ = ω(u, Av)`.
    fn cross(&self, v: &[C64], u: &[C64]) -> Result<KDual> {
        let n = self.ambient_dim();
        for x in [v, u] {
            if x.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: x.len(),
                });
            }
        }
        let coords = self
            .algebra_basis()
            .iter()
            .map(|t| omega(u, &mat_vec(t, v)))
            .collect::<Result<Vec<f64>>>()?;
        Ok(KDual { coords })
    }

    /// `s₁(A₁)(φ) = ⟨A₁ v_φ, v_φ⟩`.
    fn berezin_symbol_k(&self, a1: &CMatrix, phi: &OrbitPoint) -> Result<C64> {
        let d = self.dim_v();
        if a1.nrows() != d || a1.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: a1.nrows(),
            });
        }
        let v = self.coherent_vector(phi)?;
        Ok((v.adjoint() * a1 * &v)[(0, 0)])
    }

    fn on_orbit(&self, phi: &OrbitPoint, tol: f64) -> bool {
        phi.coords.len() == self.algebra_basis().len() && (phi.norm() - self.orbit_radius()).abs() <= tol
    }
}

/// Parameters used to construct registered irreps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IrrepParams {
    /// Spin for `SU(2)`.
    pub j: f64,
    /// Character `e^{iθ} ↦ e^{imθ}` for `U(1)`.
    pub charge: i32,
}

impl Default for IrrepParams {
    fn default() -> Self {
        IrrepParams { j: 0.5, charge: 0 }
    }
}

type Constructor = fn(&IrrepParams) -> Result<Arc<dyn CompactIrrep>>;

/// Name-indexed constructors for [`CompactIrrep`] implementations.
pub struct IrrepRegistry {
    entries: Vec<(&'static str, Constructor)>,
}

impl IrrepRegistry {
    pub fn empty() -> Self {
        IrrepRegistry { entries: Vec::new() }
    }

    /// Registry with `u1` and `su2`.
    pub fn standard() -> Self {
        let mut r = IrrepRegistry::empty();
        r.register("u1", |p| Ok(Arc::new(U1Character::new(p.charge))));
        r.register("su2", |p| Ok(Arc::new(Su2Spin::new(p.j)?)));
        r
    }

    pub fn register(&mut self, name: &'static str, ctor: Constructor) {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, ctor));
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }

    pub fn build(&self, name: &str, params: &IrrepParams) -> Result<Arc<dyn CompactIrrep>> {
        let lower = name.to_ascii_lowercase();
        match self.entries.iter().find(|(n, _)| *n == lower) {
            Some((_, ctor)) => ctor(params),
            None => Err(Error::UnknownName {
                kind: "compact group",
                name: name.to_string(),
            }),
        }
    }
}
