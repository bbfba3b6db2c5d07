//! The Stratonovich–Weyl correspondence `w₁` of the compact factor, built as
//! the unitary polar factor of the discretized Berezin map `s₁`.

use std::sync::Arc;

use super::{CompactIrrep, OrbitGrid, OrbitPoint};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};

/// A built `w₁`: `w₁(A)(φ) = s₁(|s₁|^{-1} A)(φ)`, with
/// `|s₁| = (s₁* s₁)^{1/2}` computed from the singular value decomposition of
/// the sampled Berezin map.
#[derive(Clone, Debug)]
pub struct CompactSwc {
    irrep: Arc<dyn CompactIrrep>,
    /// `|s₁|^{-1}` on vectorized operators, index `i + j·d` for `E_{ij}`.
    inverse_modulus: CMatrix,
    singular_values: Vec<f64>,
    grid_order: usize,
}

impl CompactSwc {
    /// Build `w₁` from samples of `s₁(E_{ij})` on an orbit grid of the given
    /// order.
    pub fn build(irrep: Arc<dyn CompactIrrep>, grid_order: usize) -> Result<Self> {
        let required = irrep.min_grid_order();
        if grid_order < required {
            return Err(Error::InsufficientGridOrder {
                required,
                actual: grid_order,
            });
        }
        let grid = irrep.orbit_grid(grid_order)?;
        Self::build_on(irrep, &grid, grid_order)
    }

    /// Build on an explicit grid; the grid's total mass must be `dim V`.
    pub fn build_on(irrep: Arc<dyn CompactIrrep>, grid: &OrbitGrid, grid_order: usize) -> Result<Self> {
        let d = irrep.dim_v();
        let mass = grid.total_mass();
        if (mass - d as f64).abs() > 1e-10 * d as f64 {
            return Err(Error::InvalidParameter(format!(
                "orbit measure must have total mass dim V = {d}, got {mass}"
            )));
        }
        let vectors = grid
            .points
            .iter()
            .map(|p| irrep.coherent_vector(p))
            .collect::<Result<Vec<_>>>()?;
        let rows = grid.points.len();
        let mut s = CMatrix::zeros(rows, d * d);
        for (r, (v, &w)) in vectors.iter().zip(&grid.weights).enumerate() {
            let sw = w.sqrt();
            for j in 0..d {
                for i in 0..d {
                    // s₁(E_{ij})(φ) = v_i conj(v_j)
                    s[(r, i + j * d)] = v[i] * v[j].conj() * sw;
                }
            }
        }
        let svd = s.svd(false, true);
        let v_t = svd.v_t.expect("requested right singular vectors");
        let sigma: Vec<f64> = svd.singular_values.iter().copied().collect();
        let top = sigma.iter().cloned().fold(0.0, f64::max);
        let bottom = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
        if sigma.len() < d * d || !(bottom > 1e-10 * top) {
            return Err(Error::RankDeficient(if sigma.len() < d * d { 0.0 } else { bottom / top }));
        }
        let inv = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            sigma.len(),
            sigma.iter().map(|x| C64::new(1.0 / x, 0.0)),
        ));
        let inverse_modulus = v_t.adjoint() * inv * &v_t;
        Ok(CompactSwc {
            irrep,
            inverse_modulus,
            singular_values: sigma,
            grid_order,
        })
    }

    pub fn irrep(&self) -> &Arc<dyn CompactIrrep> {
        &self.irrep
    }

    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    pub fn grid_order(&self) -> usize {
        self.grid_order
    }

    fn check(&self, a: &CMatrix) -> Result<()> {
        let d = self.irrep.dim_v();
        if a.nrows() != d || a.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: a.nrows(),
            });
        }
        Ok(())
    }

    /// `|s₁|^{-1} A`.
    fn corrected(&self, a: &CMatrix) -> CMatrix {
        let d = self.irrep.dim_v();
        let vec = nalgebra::DVector::from_iterator(d * d, a.iter().copied());
        let out = &self.inverse_modulus * vec;
        CMatrix::from_iterator(d, d, out.iter().copied())
    }

    /// `w₁(A)(φ)`.
    pub fn w1(&self, a: &CMatrix, phi: &OrbitPoint) -> Result<C64> {
        self.check(a)?;
        self.irrep.berezin_symbol_k(&self.corrected(a), phi)
    }

    /// `ω₁(φ)` with `(ω₁)_{ji} = w₁(E_{ij})(φ)`, so `w₁(A)(φ) = Tr(A ω₁(φ))`.
    pub fn quantizer1(&self, phi: &OrbitPoint) -> Result<CMatrix> {
        let d = self.irrep.dim_v();
        let v = self.irrep.coherent_vector(phi)?;
        let proj = &v * v.adjoint();
        // w₁(E_{ij})(φ) = ⟨|s₁|^{-1}E_{ij}, P_φ^T⟩ entrywise
        let mut out = CMatrix::zeros(d, d);
        for j in 0..d {
            for i in 0..d {
                let col = self.inverse_modulus.column(i + j * d);
                let mut acc = C64::new(0.0, 0.0);
                for jj in 0..d {
                    for ii in 0..d {
                        acc += col[ii + jj * d] * proj[(jj, ii)];
                    }
                }
                out[(j, i)] = acc;
            }
        }
        Ok(out)
    }
}
