use swcorr::compact::{so3_image, CompactIrrep, Su2Spin};
use swcorr::fock::{coherent_state, evaluate, gaussian_moment, inner_product, FockBasis, FockVector, MultiIndex};
use swcorr::linalg::max_abs;
use swcorr::quadrature::{plane_grid, sphere_grid, PhaseSpaceGrid};
use swcorr::{CMatrix, C64};

use super::{random_c64, random_point, CheckSpec, Outcome, Suite};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct FockSuite;

fn indices_up_to(n: usize, d: usize) -> Vec<MultiIndex> {
    (0..=d).flat_map(|k| MultiIndex::of_degree(n, k)).collect()
}

/// Rows `√wᵢ f_j(wᵢ)` over the grid nodes, so that `VᵀV̄` is the matrix of
/// weighted integrals `∫ f_a f̄_b`.
fn weighted_values<F: Fn(&[C64], usize) -> C64>(grid: &PhaseSpaceGrid, cols: usize, f: F) -> CMatrix {
    let nodes = grid.nodes();
    let weights = grid.weights();
    CMatrix::from_fn(nodes.len(), cols, |r, j| f(&nodes[r], j) * weights[r].sqrt())
}

impl Suite for FockSuite {
    fn name(&self) -> &'static str {
        "fock"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let (n, lambda, cutoff, order) = (cfg.n, cfg.lambda, cfg.cutoff, cfg.plane_order);
        let mut out = Vec::new();

        out.push(CheckSpec::new(
            "fock.orthonormality",
            "Gram matrix of the monomial basis is the identity",
            1e-10,
            move |_| {
                let c = cutoff.min(12);
                let basis = FockBasis::new(n, lambda, c)?;
                let grid = plane_grid(n, if n == 1 { order.max(c + 4) } else { c + 4 }, lambda, 2.0 * lambda)?;
                let v = weighted_values(&grid, basis.dim(), |w, i| basis.eval_basis(i, w));
                let gram = v.transpose() * v.conjugate();
                let worst = max_abs(&(gram - CMatrix::identity(basis.dim(), basis.dim())));
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "fock.reproducing_property",
            "evaluation equals pairing with the coherent state",
            1e-12,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..10 {
                    let coeffs: Vec<C64> = (0..basis.dim()).map(|_| random_c64(rng, 1.0)).collect();
                    let f = FockVector::new(&basis, coeffs)?;
                    let z = random_point(rng, n, 2.0 * lambda.sqrt());
                    let direct = evaluate(&f, &z)?;
                    let paired = inner_product(&f, &coherent_state(&z, &basis)?)?;
                    worst = worst.max(super::rel(paired, direct));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "fock.gaussian_moment",
            "analytic Gaussian moments match quadrature for |k|,|l| <= 6 (error relative to the moment scale when above 1)",
            1e-10,
            move |_| {
                let grid = plane_grid(n, if n == 1 { order.max(7) } else { 7 }, lambda, lambda)?;
                let idx = indices_up_to(n, 6);
                let v = weighted_values(&grid, idx.len(), |w, i| idx[i].monomial(w));
                let moments = v.transpose() * v.conjugate();
                let mut worst: f64 = 0.0;
                for (a, k) in idx.iter().enumerate() {
                    for (b, l) in idx.iter().enumerate() {
                        let scale = (gaussian_moment(k, k, lambda)? * gaussian_moment(l, l, lambda)?).sqrt().max(1.0);
                        worst = worst.max((moments[(a, b)] - gaussian_moment(k, l, lambda)?).norm() / scale);
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "fock.coherent_norm",
            "truncated coherent norms increase to exp(|z|^2/2 lambda)",
            1e-8,
            move |rng| {
                let z = random_point(rng, n, lambda.sqrt());
                let exact = (z.iter().map(|w| w.norm_sqr()).sum::<f64>() / (2.0 * lambda)).exp();
                let mut last = 0.0;
                let mut violation: f64 = 0.0;
                for c in 0..=cutoff {
                    let basis = FockBasis::new(n, lambda, c)?;
                    let e = coherent_state(&z, &basis)?;
                    let v = inner_product(&e, &e)?.re;
                    violation = violation.max(last - v).max(v - exact);
                    last = v;
                }
                let gap = if cutoff >= 12 { (exact - last) / exact } else { 0.0 };
                Ok(Outcome::Error(violation.max(0.0).max(gap)))
            },
        ));

        out.push(CheckSpec::new(
            "quadrature.plane_exactness",
            "plane rule is exact for monomials up to degree 2*order-1",
            1e-12,
            move |_| {
                let q = order.min(10);
                let grid = plane_grid(n, q, lambda, lambda)?;
                let idx = indices_up_to(n, 2 * q - 1);
                let mut worst: f64 = 0.0;
                for k in &idx {
                    for l in &idx {
                        if k.degree() + l.degree() > 2 * q - 1 {
                            continue;
                        }
                        let v = grid.integrate_weighted(|w| k.monomial(w) * l.conj_monomial(w));
                        let scale = (gaussian_moment(k, k, lambda)? * gaussian_moment(l, l, lambda)?).sqrt();
                        worst = worst.max((v - gaussian_moment(k, l, lambda)?).norm() / scale);
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "quadrature.sphere_rotation",
            "sphere rule is invariant under rotations within its exactness",
            1e-10,
            move |rng| {
                let deg = 6;
                let grid = sphere_grid(deg, 4.0 * std::f64::consts::PI)?;
                let su2 = Su2Spin::new(0.5)?;
                let mut worst: f64 = 0.0;
                for _ in 0..10 {
                    let factors: Vec<([f64; 3], f64)> = (0..deg)
                        .map(|_| {
                            let a = random_c64(rng, 1.0);
                            let b = random_c64(rng, 1.0);
                            ([a.re, a.im, b.re], b.im)
                        })
                        .collect();
                    let s = |x: &[f64; 3]| -> f64 {
                        factors
                            .iter()
                            .map(|(a, b)| a[0] * x[0] + a[1] * x[1] + a[2] * x[2] + b)
                            .product()
                    };
                    let r = so3_image(&su2.random_element(rng));
                    let rotate = |x: &[f64; 3]| -> [f64; 3] {
                        let mut y = [0.0; 3];
                        for (i, yi) in y.iter_mut().enumerate() {
                            *yi = (0..3).map(|j| r[i][j] * x[j]).sum();
                        }
                        y
                    };
                    let mut plain = 0.0;
                    let mut rotated = 0.0;
                    for (x, w) in grid.nodes().iter().zip(grid.weights()) {
                        plain += w * s(x);
                        rotated += w * s(&rotate(x));
                    }
                    worst = worst.max((plain - rotated).abs() / plain.abs().max(1.0));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        Ok(out)
    }
}
