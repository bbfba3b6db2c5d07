//! `K = SU(2)` acting on `ℂ²`, with the spin-`j` representation on
//! homogeneous polynomials of degree `2j` in two variables.
//!
//! The algebra basis is `Tₐ = iσₐ/2`, so `dρ(Tₐ) = iJₐ`, and orbit points are
//! the expectation vectors `⟨J⟩` of spin coherent states, a sphere of
//! radius `j`.

use rand::RngCore;
use rand_distr::{Distribution, StandardNormal};

use super::{CompactIrrep, OrbitGrid, OrbitPoint};
use crate::error::{Error, Result};
use crate::fock::ln_factorial;
use crate::linalg::{CMatrix, CVector, C64, I};
use crate::quadrature::sphere_grid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Su2Spin {
    two_j: usize,
}

fn pauli() -> [CMatrix; 3] {
    let o = C64::new(0.0, 0.0);
    let l = C64::new(1.0, 0.0);
    [
        CMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        CMatrix::from_row_slice(2, 2, &[o, -I, I, o]),
        CMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
    ]
}

/// `k = cos(θ/2) I − i sin(θ/2) (u·σ)`, the rotation by `θ` about the unit
/// axis `u`.
pub fn su2_rotation(axis: [f64; 3], theta: f64) -> CMatrix {
    let s = pauli();
    let mut k = CMatrix::identity(2, 2) * C64::new((0.5 * theta).cos(), 0.0);
    for a in 0..3 {
        k -= &s[a] * (I * (0.5 * theta).sin() * axis[a]);
    }
    k
}

/// The `SO(3)` image: `k σ_b k† = Σₐ R_{ab} σₐ`.
pub fn so3_image(k: &CMatrix) -> [[f64; 3]; 3] {
    let s = pauli();
    let mut r = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            r[a][b] = 0.5 * (&s[a] * k * &s[b] * k.adjoint()).trace().re;
        }
    }
    r
}

impl Su2Spin {
    pub fn new(j: f64) -> Result<Self> {
        let two_j = (2.0 * j).round();
        if !(j > 0.0) || (2.0 * j - two_j).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "spin must be a positive half-integer, got {j}"
            )));
        }
        Ok(Su2Spin { two_j: two_j as usize })
    }

    pub fn j(&self) -> f64 {
        0.5 * self.two_j as f64
    }

    /// `Jₐ = −i dρ(Tₐ)`.
    pub fn spin_matrices(&self) -> [CMatrix; 3] {
        let basis = self.algebra_basis();
        [0, 1, 2].map(|a| self.drho(&basis[a]).expect("2 × 2 generator") * (-I))
    }

    /// Coefficient expansion of `(α e₁ + β e₂)^a (γ e₁ + δ e₂)^b`, indexed by
    /// the power of `e₂`.
    fn expand(col1: (C64, C64), a: usize, col2: (C64, C64), b: usize) -> Vec<C64> {
        let mut poly = vec![C64::new(1.0, 0.0)];
        let mul = |poly: &Vec<C64>, (x, y): (C64, C64)| {
            let mut out = vec![C64::new(0.0, 0.0); poly.len() + 1];
            for (m, c) in poly.iter().enumerate() {
                out[m] += c * x;
                out[m + 1] += c * y;
            }
            out
        };
        for _ in 0..a {
            poly = mul(&poly, col1);
        }
        for _ in 0..b {
            poly = mul(&poly, col2);
        }
        poly
    }

    /// `ln √((2j−m)! m!)`, the log-norm of `e₁^{2j−m} e₂^m`.
    fn ln_norm(&self, m: usize) -> f64 {
        0.5 * (ln_factorial(self.two_j - m) + ln_factorial(m))
    }

    fn check(&self, m: &CMatrix) -> Result<()> {
        if m.nrows() != 2 || m.ncols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: m.nrows(),
            });
        }
        Ok(())
    }

    fn unit_direction(&self, phi: &OrbitPoint) -> Result<[f64; 3]> {
        let r = phi.norm();
        if phi.coords.len() != 3 || !(r > 0.0) || (r - self.j()).abs() > 1e-8 * self.j().max(1.0) {
            return Err(Error::OffOrbit(format!("{phi} is not on the sphere of radius {}", self.j())));
        }
        Ok([phi.coords[0] / r, phi.coords[1] / r, phi.coords[2] / r])
    }

    /// Geodesic rotation taking the north pole to `n`; `None` at the south
    /// pole, where the axis is undetermined.
    fn geodesic(n: [f64; 3]) -> Option<CMatrix> {
        // ẑ × n = (−n_y, n_x, 0)
        let s = (n[0] * n[0] + n[1] * n[1]).sqrt();
        let theta = s.atan2(n[2]);
        if s < 1e-14 {
            return if n[2] > 0.0 { Some(CMatrix::identity(2, 2)) } else { None };
        }
        Some(su2_rotation([-n[1] / s, n[0] / s, 0.0], theta))
    }
}

impl CompactIrrep for Su2Spin {
    fn name(&self) -> &'static str {
        "su2"
    }

    fn label(&self) -> String {
        if self.two_j % 2 == 0 {
            format!("su2 j={}", self.two_j / 2)
        } else {
            format!("su2 j={}/2", self.two_j)
        }
    }

    fn ambient_dim(&self) -> usize {
        2
    }

    fn dim_v(&self) -> usize {
        self.two_j + 1
    }

    fn algebra_basis(&self) -> Vec<CMatrix> {
        pauli().iter().map(|s| s * (0.5 * I)).collect()
    }

    /// `ρ(k)` on the orthonormal basis `e₁^{2j−m} e₂^m / √((2j−m)! m!)`.
    fn rho(&self, k: &CMatrix) -> Result<CMatrix> {
        self.check(k)?;
        let d = self.dim_v();
        let col1 = (k[(0, 0)], k[(1, 0)]);
        let col2 = (k[(0, 1)], k[(1, 1)]);
        let mut out = CMatrix::zeros(d, d);
        for m in 0..d {
            let coeffs = Self::expand(col1, self.two_j - m, col2, m);
            for (mp, c) in coeffs.into_iter().enumerate() {
                out[(mp, m)] = c * (self.ln_norm(mp) - self.ln_norm(m)).exp();
            }
        }
        Ok(out)
    }

    /// Derivation extension of `A` to degree-`2j` polynomials.
    fn drho(&self, a: &CMatrix) -> Result<CMatrix> {
        self.check(a)?;
        let d = self.dim_v();
        let mut out = CMatrix::zeros(d, d);
        for m in 0..d {
            let p = (self.two_j - m) as f64;
            let q = m as f64;
            // A e₁ = a₀₀ e₁ + a₁₀ e₂ replaces one factor e₁ in e₁^p e₂^q
            let mut add = |target: usize, coeff: C64| {
                out[(target, m)] += coeff * (self.ln_norm(target) - self.ln_norm(m)).exp();
            };
            if p > 0.0 {
                add(m, a[(0, 0)] * p);
                add(m + 1, a[(1, 0)] * p);
            }
            if q > 0.0 {
                add(m - 1, a[(0, 1)] * q);
                add(m, a[(1, 1)] * q);
            }
        }
        Ok(out)
    }

    fn base_point(&self) -> OrbitPoint {
        OrbitPoint::new(vec![0.0, 0.0, self.j()])
    }

    fn orbit_radius(&self) -> f64 {
        self.j()
    }

    /// `ρ(k) e₁^{2j}/√((2j)!)` for a rotation `k` taking the north pole to
    /// `φ`; at the south pole the rotation about the x-axis is used, which
    /// changes `v_φ` only by a phase relative to any other choice.
    fn coherent_vector(&self, phi: &OrbitPoint) -> Result<CVector> {
        let n = self.unit_direction(phi)?;
        let k = Self::geodesic(n).unwrap_or_else(|| su2_rotation([1.0, 0.0, 0.0], std::f64::consts::PI));
        let r = self.rho(&k)?;
        Ok(r.column(0).into_owned())
    }

    fn section(&self, phi: &OrbitPoint) -> Result<CMatrix> {
        let n = self.unit_direction(phi)?;
        Self::geodesic(n).ok_or(Error::SectionSingular)
    }

    fn orbit_grid(&self, order: usize) -> Result<OrbitGrid> {
        let g = sphere_grid(order, self.dim_v() as f64)?;
        let j = self.j();
        Ok(OrbitGrid {
            points: g
                .nodes()
                .iter()
                .map(|x| OrbitPoint::new(vec![j * x[0], j * x[1], j * x[2]]))
                .collect(),
            weights: g.weights().to_vec(),
        })
    }

    fn min_grid_order(&self) -> usize {
        2 * self.two_j + 2
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> CMatrix {
        let mut q = [0.0f64; 4];
        for x in q.iter_mut() {
            *x = StandardNormal.sample(rng);
        }
        let r = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        let [a, b, c, d] = q.map(|x| x / r);
        CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(a, b), C64::new(c, d), C64::new(-c, d), C64::new(a, -b)],
        )
    }

    fn random_point(&self, rng: &mut dyn RngCore) -> OrbitPoint {
        let mut x = [0.0f64; 3];
        for v in x.iter_mut() {
            *v = StandardNormal.sample(rng);
        }
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let j = self.j();
        OrbitPoint::new(x.iter().map(|v| j * v / r).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, re};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spin_half_is_defining_representation() {
        let s = Su2Spin::new(0.5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let k = s.random_element(&mut rng);
        assert!(max_abs(&(s.rho(&k).unwrap() - &k)) < 1e-14);
        let j = s.spin_matrices();
        let p = pauli();
        for a in 0..3 {
            assert!(max_abs(&(&j[a] - &p[a] * re(0.5))) < 1e-15);
        }
    }

    #[test]
    fn rho_is_homomorphism_and_unitary() {
        for j in [0.5, 1.0, 1.5] {
            let s = Su2Spin::new(j).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let k1 = s.random_element(&mut rng);
            let k2 = s.random_element(&mut rng);
            let lhs = s.rho(&(&k1 * &k2)).unwrap();
            let rhs = s.rho(&k1).unwrap() * s.rho(&k2).unwrap();
            assert!(max_abs(&(lhs - rhs)) < 1e-12);
            let r = s.rho(&k1).unwrap();
            let d = s.dim_v();
            assert!(max_abs(&(r.adjoint() * &r - CMatrix::identity(d, d))) < 1e-12);
        }
    }

    #[test]
    fn drho_preserves_brackets() {
        let s = Su2Spin::new(1.0).unwrap();
        let t = s.algebra_basis();
        for a in 0..3 {
            for b in 0..3 {
                let br = &t[a] * &t[b] - &t[b] * &t[a];
                let da = s.drho(&t[a]).unwrap();
                let db = s.drho(&t[b]).unwrap();
                let lhs = s.drho(&br).unwrap();
                assert!(max_abs(&(lhs - (&da * &db - &db * &da))) < 1e-12);
            }
        }
    }

    #[test]
    fn half_turn_about_x_maps_north_to_south() {
        let s = Su2Spin::new(0.5).unwrap();
        let k = su2_rotation([1.0, 0.0, 0.0], std::f64::consts::PI);
        let south = s.coadjoint(&k, &s.base_point());
        assert!((south.coords[2] + 0.5).abs() < 1e-14);
        assert!(south.coords[0].abs() < 1e-14 && south.coords[1].abs() < 1e-14);
    }

    #[test]
    fn coadjoint_is_so3_rotation() {
        let s = Su2Spin::new(1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = s.random_element(&mut rng);
        let phi = s.random_point(&mut rng);
        let r = so3_image(&k);
        let moved = s.coadjoint(&k, &phi);
        for a in 0..3 {
            let expect: f64 = (0..3).map(|b| r[a][b] * phi.coords[b]).sum();
            assert!((moved.coords[a] - expect).abs() < 1e-13);
        }
        assert!((moved.norm() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn section_properties() {
        let s = Su2Spin::new(0.5).unwrap();
        assert!(max_abs(&(s.section(&s.base_point()).unwrap() - CMatrix::identity(2, 2))) < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let phi = s.random_point(&mut rng);
            let k = s.section(&phi).unwrap();
            assert!(s.coadjoint(&k, &s.base_point()).distance(&phi) < 1e-12);
        }
        let south = OrbitPoint::new(vec![0.0, 0.0, -0.5]);
        assert!(matches!(s.section(&south), Err(Error::SectionSingular)));
        assert!(s.coherent_vector(&south).is_ok());
    }

    #[test]
    fn berezin_of_jz() {
        let s = Su2Spin::new(0.5).unwrap();
        let jz = &s.spin_matrices()[2];
        assert!((s.berezin_symbol_k(jz, &s.base_point()).unwrap() - re(0.5)).norm() < 1e-15);
        let theta: f64 = 1.1;
        let phi = OrbitPoint::new(vec![0.5 * theta.sin(), 0.0, 0.5 * theta.cos()]);
        let v = s.berezin_symbol_k(jz, &phi).unwrap();
        assert!((v - re(0.5 * theta.cos())).norm() < 1e-14);
    }

    #[test]
    fn adaptedness_calibration() {
        for j in [0.5, 1.0] {
            let s = Su2Spin::new(j).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..5 {
                let phi = s.random_point(&mut rng);
                let a = s.algebra_element(&[0.3, -1.2, 0.7]);
                let lhs = s.berezin_symbol_k(&s.drho(&a).unwrap(), &phi).unwrap();
                let rhs = I * s.pair(&phi.as_dual(), &a);
                assert!((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_spin() {
        assert!(Su2Spin::new(0.3).is_err());
        assert!(Su2Spin::new(0.0).is_err());
    }
}
