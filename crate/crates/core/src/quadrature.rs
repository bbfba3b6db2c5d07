//! Quadrature rules against `dμ_λ` on `ℂⁿ` and against an invariant measure
//! on the unit sphere.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{pairwise_sum, C64};

/// Gauss–Hermite nodes and weights for `∫ f(t) e^{-t²} dt`, exact for
/// polynomials of degree `≤ 2·order − 1`.
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    let m = order;
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    let pim4 = PI.powf(-0.25);
    let half = m.div_ceil(2);
    let mut z = 0.0f64;
    for i in 0..half {
        z = match i {
            0 => (2.0 * m as f64 + 1.0).sqrt() - 1.85575 * (2.0 * m as f64 + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * (m as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            // orthonormal Hermite recurrence
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 1..=m {
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / j as f64).sqrt() * p2 - ((j as f64 - 1.0) / j as f64).sqrt() * p3;
            }
            pp = (2.0 * m as f64).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[m - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[m - 1 - i] = w[i];
    }
    // ascending
    x.reverse();
    w.reverse();
    (x, w)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let m = order;
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 1..=m {
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j as f64 - 1.0) * z * p2 - (j as f64 - 1.0) * p3) / j as f64;
            }
            pp = m as f64 * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[m - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[m - 1 - i] = w[i];
    }
    (x, w)
}

/// Tensor Gauss–Hermite rule on `ℂⁿ` for the measure
/// `e^{-|w−c|²/s} dμ_λ(w)`, with the Gaussian density folded into the
/// weights.
#[derive(Clone, Debug)]
pub struct PhaseSpaceGrid {
    nodes: Vec<Vec<C64>>,
    weights: Vec<f64>,
    lambda: f64,
    scale: f64,
    center: Vec<C64>,
    order: usize,
}

/// Rule for `∫ g(w) e^{-|w|²/s} dμ_λ(w)` on `ℂⁿ`, exact when `g` is a
/// polynomial of degree `≤ 2·order − 1` in each real coordinate.
pub fn plane_grid(n: usize, order: usize, lambda: f64, scale: f64) -> Result<PhaseSpaceGrid> {
    plane_grid_centered(&vec![C64::new(0.0, 0.0); n], order, lambda, scale)
}

/// Same as [`plane_grid`] with the Gaussian centred at `center`.
pub fn plane_grid_centered(center: &[C64], order: usize, lambda: f64, scale: f64) -> Result<PhaseSpaceGrid> {
    let n = center.len();
    if order == 0 {
        return Err(Error::InvalidParameter("quadrature order must be positive".into()));
    }
    if n == 0 || !(lambda > 0.0) || !(scale > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "plane grid needs n > 0, lambda > 0, scale > 0 (got n={n}, lambda={lambda}, scale={scale})"
        )));
    }
    let (t, wt) = gauss_hermite(order);
    let sq = scale.sqrt();
    // ∫ e^{-x²/s} dx = √s Σ wᵢ; two real coordinates per complex one and
    // the (2πλ)^{-1} density of dμ_λ
    let per_complex = scale / (2.0 * PI * lambda);
    let m = order;
    let total = m.pow(2 * n as u32);
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    let mut digits = vec![0usize; 2 * n];
    for _ in 0..total {
        let mut node = Vec::with_capacity(n);
        let mut weight = 1.0;
        for k in 0..n {
            let (a, b) = (digits[2 * k], digits[2 * k + 1]);
            node.push(center[k] + C64::new(sq * t[a], sq * t[b]));
            weight *= per_complex * wt[a] * wt[b];
        }
        nodes.push(node);
        weights.push(weight);
        for d in digits.iter_mut() {
            *d += 1;
            if *d < m {
                break;
            }
            *d = 0;
        }
    }
    Ok(PhaseSpaceGrid {
        nodes,
        weights,
        lambda,
        scale,
        center: center.to_vec(),
        order,
    })
}

impl PhaseSpaceGrid {
    pub fn n(&self) -> usize {
        self.center.len()
    }

    pub fn nodes(&self) -> &[Vec<C64>] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The `s` in `e^{-|w−c|²/s}`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn center(&self) -> &[C64] {
        &self.center
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Highest per-coordinate polynomial degree integrated exactly.
    pub fn exactness_degree(&self) -> usize {
        2 * self.order - 1
    }

    /// Total mass `(s/2λ)^n` of the represented measure.
    pub fn total_mass(&self) -> f64 {
        (self.scale / (2.0 * self.lambda)).powi(self.n() as i32)
    }

    /// The Gaussian density `e^{-|w−c|²/s}` folded into the weights.
    pub fn density(&self, w: &[C64]) -> f64 {
        let r2: f64 = w.iter().zip(&self.center).map(|(a, b)| (a - b).norm_sqr()).sum();
        (-r2 / self.scale).exp()
    }

    /// `∫ g(w) e^{-|w−c|²/s} dμ_λ(w)`.
    pub fn integrate_weighted<F: FnMut(&[C64]) -> C64>(&self, mut g: F) -> C64 {
        let terms: Vec<C64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(w, &wt)| g(w) * wt)
            .collect();
        pairwise_sum(&terms)
    }

    /// `∫ f(w) dμ_λ(w)` for an integrand that already carries its own
    /// Gaussian decay; `f` is divided by the grid density at every node.
    pub fn integrate<F: FnMut(&[C64]) -> C64>(&self, mut f: F) -> C64 {
        let terms: Vec<C64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(w, &wt)| f(w) * (wt / self.density(w)))
            .collect();
        pairwise_sum(&terms)
    }
}

/// Product rule on the unit sphere: Gauss–Legendre in `cos θ`, uniform in
/// azimuth. Exact for spherical polynomials of degree `≤ order`.
#[derive(Clone, Debug)]
pub struct SphereGrid {
    nodes: Vec<[f64; 3]>,
    weights: Vec<f64>,
    total_mass: f64,
    order: usize,
}

pub fn sphere_grid(order: usize, total_mass: f64) -> Result<SphereGrid> {
    if order == 0 {
        return Err(Error::InvalidParameter("sphere grid order must be positive".into()));
    }
    if !(total_mass > 0.0) {
        return Err(Error::InvalidParameter(format!("total mass must be positive, got {total_mass}")));
    }
    let (ct, wt) = gauss_legendre(order / 2 + 1);
    let n_az = order + 1;
    let mut nodes = Vec::with_capacity(ct.len() * n_az);
    let mut weights = Vec::with_capacity(ct.len() * n_az);
    for (&cz, &w) in ct.iter().zip(&wt) {
        let st = (1.0 - cz * cz).max(0.0).sqrt();
        for k in 0..n_az {
            let az = 2.0 * PI * (k as f64 + 0.5) / n_az as f64;
            nodes.push([st * az.cos(), st * az.sin(), cz]);
            weights.push(w * (2.0 * PI / n_az as f64) * total_mass / (4.0 * PI));
        }
    }
    Ok(SphereGrid {
        nodes,
        weights,
        total_mass,
        order,
    })
}

impl SphereGrid {
    pub fn nodes(&self) -> &[[f64; 3]] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn integrate<F: FnMut(&[f64; 3]) -> C64>(&self, mut f: F) -> C64 {
        let terms: Vec<C64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, &w)| f(x) * w)
            .collect();
        pairwise_sum(&terms)
    }
}
