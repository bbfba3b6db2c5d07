//! `K = U(1)` acting on `ℂ¹`, with the character `e^{iθ} ↦ e^{imθ}`.

use rand::{Rng, RngCore};

use super::{CompactIrrep, OrbitGrid, OrbitPoint};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector, C64, I};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U1Character {
    charge: i32,
}

impl U1Character {
    pub fn new(charge: i32) -> Self {
        U1Character { charge }
    }

    pub fn charge(&self) -> i32 {
        self.charge
    }

    fn check(m: &CMatrix) -> Result<()> {
        if m.nrows() != 1 || m.ncols() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: m.nrows(),
            });
        }
        Ok(())
    }
}

impl CompactIrrep for U1Character {
    fn name(&self) -> &'static str {
        "u1"
    }

    fn label(&self) -> String {
        format!("u1 m={}", self.charge)
    }

    fn ambient_dim(&self) -> usize {
        1
    }

    fn dim_v(&self) -> usize {
        1
    }

    fn algebra_basis(&self) -> Vec<CMatrix> {
        vec![CMatrix::from_element(1, 1, I)]
    }

    fn rho(&self, k: &CMatrix) -> Result<CMatrix> {
        Self::check(k)?;
        let u = k[(0, 0)];
        Ok(CMatrix::from_element(1, 1, C64::from_polar(1.0, self.charge as f64 * u.arg())))
    }

    fn drho(&self, a: &CMatrix) -> Result<CMatrix> {
        Self::check(a)?;
        Ok(a * C64::new(self.charge as f64, 0.0))
    }

    fn base_point(&self) -> OrbitPoint {
        OrbitPoint::new(vec![self.charge as f64])
    }

    fn orbit_radius(&self) -> f64 {
        (self.charge as f64).abs()
    }

    fn coherent_vector(&self, phi: &OrbitPoint) -> Result<CVector> {
        self.section(phi)?;
        Ok(CVector::from_element(1, C64::new(1.0, 0.0)))
    }

    fn section(&self, phi: &OrbitPoint) -> Result<CMatrix> {
        if phi.coords.len() != 1 || (phi.coords[0] - self.charge as f64).abs() > 1e-9 {
            return Err(Error::OffOrbit(format!("{phi} is not the u1 orbit point {}", self.charge)));
        }
        Ok(CMatrix::identity(1, 1))
    }

    fn orbit_grid(&self, _order: usize) -> Result<OrbitGrid> {
        Ok(OrbitGrid {
            points: vec![self.base_point()],
            weights: vec![1.0],
        })
    }

    fn min_grid_order(&self) -> usize {
        0
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> CMatrix {
        let theta = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        CMatrix::from_element(1, 1, C64::from_polar(1.0, theta))
    }

    fn random_point(&self, _rng: &mut dyn RngCore) -> OrbitPoint {
        self.base_point()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn cross_of_z_with_itself() {
        let k = U1Character::new(0);
        let z = [c(0.6, -0.8)];
        let d = k.cross(&z, &z).unwrap();
        // ⟨z × z, i⟩ = |z|²
        assert!((d.coords[0] - 1.0).abs() < 1e-15);
        assert_eq!(k.cross(&[c(0.0, 0.0)], &z).unwrap().coords, vec![0.0]);
    }

    #[test]
    fn character_and_derivative() {
        let k = U1Character::new(3);
        let g = CMatrix::from_element(1, 1, C64::from_polar(1.0, 0.4));
        assert!((k.rho(&g).unwrap()[(0, 0)] - C64::from_polar(1.0, 1.2)).norm() < 1e-15);
        let a = CMatrix::from_element(1, 1, I * 0.5);
        assert!((k.drho(&a).unwrap()[(0, 0)] - I * 1.5).norm() < 1e-15);
        // adaptedness: s₁(dρ(A)) = i⟨φ₀, A⟩
        let s = k.berezin_symbol_k(&k.drho(&a).unwrap(), &k.base_point()).unwrap();
        assert!((s - I * k.pair(&k.base_point().as_dual(), &a)).norm() < 1e-15);
    }
}
