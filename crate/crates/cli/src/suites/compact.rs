use std::sync::Arc;

use swcorr::compact::{CompactIrrep, CompactSwc, Su2Spin};
use swcorr::linalg::{max_abs, trace_product};
use swcorr::{CMatrix, C64};

use super::{random_c64, random_matrix, rel, CheckSpec, Outcome, Suite};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct CompactSuite;

impl Suite for CompactSuite {
    fn name(&self) -> &'static str {
        "compact"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let irrep: Arc<dyn CompactIrrep> = cfg.irrep()?;
        let order = cfg.sphere_order;
        let swc = Arc::new(CompactSwc::build(irrep.clone(), order)?);
        let d = irrep.dim_v();
        let mut out = Vec::new();

        let w = swc.clone();
        let k = irrep.clone();
        out.push(CheckSpec::new(
            "compact.reality",
            "w1(A^*) = conj w1(A)",
            1e-10,
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..20 {
                    let a = random_matrix(rng, d);
                    let phi = k.random_point(rng);
                    worst = worst.max(rel(w.w1(&a.adjoint(), &phi)?, w.w1(&a, &phi)?.conj()));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let w = swc.clone();
        let k = irrep.clone();
        out.push(CheckSpec::new(
            "compact.covariance",
            "w1(rho(k)^-1 A rho(k))(phi) = w1(A)(k.phi)",
            1e-8,
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..20 {
                    let g = k.random_element(rng);
                    let r = k.rho(&g)?;
                    let a = random_matrix(rng, d);
                    let phi = k.random_point(rng);
                    let lhs = w.w1(&(r.adjoint() * &a * &r), &phi)?;
                    let rhs = w.w1(&a, &k.coadjoint(&g, &phi))?;
                    worst = worst.max(rel(lhs, rhs));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let w = swc.clone();
        let k = irrep.clone();
        out.push(CheckSpec::new(
            "compact.traciality",
            "integral of w1(A) w1(B) over the orbit equals Tr(AB), orbit mass 2j+1",
            1e-8,
            move |rng| {
                let grid = k.orbit_grid(order)?;
                let mut worst = (grid.total_mass() - d as f64).abs();
                for _ in 0..10 {
                    let a = random_matrix(rng, d);
                    let b = random_matrix(rng, d);
                    let mut failure = None;
                    let v = grid.integrate(|phi| match (w.w1(&a, phi), w.w1(&b, phi)) {
                        (Ok(x), Ok(y)) => x * y,
                        (Err(e), _) | (_, Err(e)) => {
                            failure = Some(e);
                            C64::new(0.0, 0.0)
                        }
                    });
                    if let Some(e) = failure {
                        return Err(e);
                    }
                    worst = worst.max(rel(v, trace_product(&a, &b)));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let k = irrep.clone();
        out.push(CheckSpec::new(
            "compact.adapted",
            "s1(drho(A))(phi) = i <phi, A>",
            1e-10,
            move |rng| {
                let dim = k.algebra_basis().len();
                let mut worst: f64 = 0.0;
                for _ in 0..20 {
                    let coords: Vec<f64> = (0..dim).map(|_| random_c64(rng, 1.0).re).collect();
                    let a = k.algebra_element(&coords);
                    let phi = k.random_point(rng);
                    let lhs = k.berezin_symbol_k(&k.drho(&a)?, &phi)?;
                    let rhs = C64::new(0.0, k.pair(&phi.as_dual(), &a));
                    worst = worst.max(rel(lhs, rhs));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let w = swc.clone();
        let k = irrep.clone();
        out.push(CheckSpec::new(
            "compact.grid_independence",
            "w1 rebuilt on a finer grid is unchanged",
            1e-8,
            move |rng| {
                let fine = CompactSwc::build(k.clone(), order + 4)?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let phi = k.random_point(rng);
                    for i in 0..d {
                        for j in 0..d {
                            let mut e = CMatrix::zeros(d, d);
                            e[(i, j)] = C64::new(1.0, 0.0);
                            worst = worst.max((w.w1(&e, &phi)? - fine.w1(&e, &phi)?).norm());
                        }
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        if irrep.name() == "su2" && (cfg.j - 0.5).abs() < 1e-12 {
            let w = swc.clone();
            let k = irrep.clone();
            out.push(CheckSpec::new(
                "compact.spin_half_quantizer",
                "spin-1/2 quantizer equals I/2 + sqrt(3) n.J",
                1e-8,
                move |rng| {
                    let spins = Su2Spin::new(0.5)?.spin_matrices();
                    let mut worst: f64 = 0.0;
                    for _ in 0..10 {
                        let phi = k.random_point(rng);
                        let r = phi.norm();
                        let mut target = CMatrix::identity(2, 2) * C64::new(0.5, 0.0);
                        for (c, s) in phi.coords.iter().zip(&spins) {
                            target += s * C64::new(3f64.sqrt() * c / r, 0.0);
                        }
                        worst = worst.max(max_abs(&(w.quantizer1(&phi)? - target)));
                    }
                    Ok(Outcome::Error(worst))
                },
            ));
        }

        Ok(out)
    }
}
