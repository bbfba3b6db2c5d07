use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use swcorr::berezin::BerezinOptions;
use swcorr::compact::CompactIrrep;
use swcorr::fock::FockBasis;
use swcorr::linalg::{expm_skew, leading_block, max_abs, trace_product};
use swcorr::motion::{coadjoint, dpi_matrix, pi_matrix, MotionAlgebraElement, MotionElement, MotionGroup, ProductOperator};
use swcorr::weyl::{pairing_grid, quantizer0};
use swcorr::{CMatrix, C64};

use super::{
    certify, interior_degree, random_c64, random_matrix, random_operator, random_point, random_sphere_point, rel,
    CheckSpec, Outcome, Suite,
};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct MotionSuite;

fn random_element(rng: &mut ChaCha8Rng, group: &MotionGroup, r: f64) -> swcorr::Result<MotionElement> {
    let z0 = random_sphere_point(rng, group.n(), r);
    MotionElement::new(z0, rng.gen_range(-1.0..1.0), group.irrep().random_element(rng))
}

fn random_algebra(rng: &mut ChaCha8Rng, group: &MotionGroup) -> swcorr::Result<MotionAlgebraElement> {
    let dim = group.irrep().algebra_basis().len();
    let coords: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    MotionAlgebraElement::new(
        (0..group.n()).map(|_| random_c64(rng, 1.0)).collect(),
        rng.gen_range(-1.0..1.0),
        group.irrep().algebra_element(&coords),
    )
}

/// `Σ A₀ⁱ ⊗ A₁ⁱ` with `terms` random terms, Fock factors supported on the
/// degree-`≤ support` block.
fn random_product(rng: &mut ChaCha8Rng, basis: &FockBasis, dim_v: usize, support: usize, terms: usize) -> swcorr::Result<ProductOperator> {
    let mut a = ProductOperator::zero(basis, dim_v);
    for _ in 0..terms {
        a.push(random_operator(rng, basis, support), random_matrix(rng, dim_v))?;
    }
    Ok(a)
}

/// Rows of `Tr(A₀ⁱ Ω₀(w))` (or `Tr(A₁ⁱ ω₁(φ))`) for every node and term.
fn factor_table<T>(nodes: &[T], terms: &[CMatrix], quantizer: impl Fn(&T) -> swcorr::Result<CMatrix>) -> swcorr::Result<Vec<Vec<C64>>> {
    nodes
        .iter()
        .map(|x| {
            let q = quantizer(x)?;
            Ok(terms.iter().map(|a| trace_product(a, &q)).collect())
        })
        .collect()
}

impl Suite for MotionSuite {
    fn name(&self) -> &'static str {
        "motion"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let irrep: Arc<dyn CompactIrrep> = cfg.irrep()?;
        let (lambda, cutoff, order) = (cfg.lambda, cfg.cutoff, cfg.sphere_order);
        let group = Arc::new(MotionGroup::new(irrep, lambda, order)?);
        let n = group.n();
        let dim_v = group.irrep().dim_v();
        let mut out = Vec::new();

        let g = group.clone();
        out.push(CheckSpec::new("motion.reality", "W(A^*) = conj W(A)", 1e-12, move |rng| {
            let basis = g.basis(cutoff.min(6))?;
            let mut worst: f64 = 0.0;
            for _ in 0..5 {
                let a = random_product(rng, &basis, dim_v, basis.cutoff(), 2)?;
                let z = random_point(rng, n, lambda.sqrt());
                let phi = g.irrep().random_point(rng);
                worst = worst.max(rel(g.w_symbol(&a.adjoint(), &z, &phi)?, g.w_symbol(&a, &z, &phi)?.conj()));
            }
            Ok(Outcome::Error(worst))
        }));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.covariance",
            "W(pi(g)^-1 A pi(g))(z, phi) = W(A)(g.(z, phi))",
            1e-6,
            move |rng| {
                let basis = g.basis(cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let el = random_element(rng, &g, 0.5 * lambda.sqrt())?;
                    if let Some(d) = certify(&el.heisenberg_part(), &basis)? {
                        return Ok(Outcome::Uncertified(d));
                    }
                    let a = random_product(rng, &basis, dim_v, interior_degree(cutoff), 2)?;
                    let z = random_point(rng, n, 0.5 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let lhs = g.w_symbol(&g.conjugate(&el.inverse(), &a)?, &z, &phi)?;
                    let (gz, gphi) = g.act(&el, &z, &phi)?;
                    worst = worst.max(rel(lhs, g.w_symbol(&a, &gz, &gphi)?));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.traciality",
            "double integral of W(A) conj W(B) equals Tr(A B^*)",
            1e-5,
            move |rng| {
                let s = 3.min(cutoff);
                let basis = g.basis(s)?;
                let plane = pairing_grid(n, lambda, s)?;
                let orbit = g.irrep().orbit_grid(order)?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let a = random_product(rng, &basis, dim_v, s, 2)?;
                    let b = random_product(rng, &basis, dim_v, s, 2)?;
                    let fock: Vec<CMatrix> = a.terms().iter().chain(b.terms()).map(|(t, _)| t.matrix().clone()).collect();
                    let comp: Vec<CMatrix> = a.terms().iter().chain(b.terms()).map(|(_, t)| t.clone()).collect();
                    let f = factor_table(plane.nodes(), &fock, |w| Ok(quantizer0(w, &basis)?.into_matrix()))?;
                    let h = factor_table(&orbit.points, &comp, |phi| g.swc().quantizer1(phi))?;
                    let na = a.terms().len();
                    let mut total = C64::new(0.0, 0.0);
                    for i in 0..na {
                        for j in na..fock.len() {
                            let mut pf = C64::new(0.0, 0.0);
                            for ((w, wt), row) in plane.nodes().iter().zip(plane.weights()).zip(&f) {
                                pf += row[i] * row[j].conj() * (wt / plane.density(w));
                            }
                            let mut pk = C64::new(0.0, 0.0);
                            for (wt, row) in orbit.weights.iter().zip(&h) {
                                pk += row[i] * row[j].conj() * *wt;
                            }
                            total += pf * pk;
                        }
                    }
                    let exact = trace_product(&a.dense(), &b.dense().adjoint());
                    worst = worst.max(rel(total, exact));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.quantizer_consistency",
            "Omega0(z) x omega1(phi) agrees with pi(g) R pi(g)^-1 on the interior block",
            1e-6,
            move |rng| {
                let basis = g.basis(cutoff)?;
                let k = basis.block_dim(interior_degree(cutoff)) * dim_v;
                let mut worst: f64 = 0.0;
                for _ in 0..2 {
                    let z = random_point(rng, n, 0.5 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    if let Some(d) = certify(&g.section(&z, &phi)?.heisenberg_part(), &basis)? {
                        return Ok(Outcome::Uncertified(d));
                    }
                    let tensor = g.quantizer(&z, &phi, &basis)?.dense();
                    let conj = g.quantizer_conjugated(&z, &phi, &basis)?.dense();
                    worst = worst.max(max_abs(&(leading_block(&tensor, k) - leading_block(&conj, k))));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.stabilizer",
            "pi(g) R pi(g)^-1 = R for g in the stabilizer of the base point",
            1e-12,
            move |rng| {
                let basis = g.basis(cutoff.min(8))?;
                let r = g.base_quantizer(&basis)?.dense();
                let base = g.irrep().base_point();
                let generator = g.irrep().algebra_element(&base.coords);
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let k = expm_skew(&(generator.clone() * C64::new(rng.gen_range(-3.0..3.0), 0.0)));
                    let el = MotionElement::new(vec![C64::new(0.0, 0.0); n], rng.gen_range(-1.0..1.0), k.clone())?;
                    let p = pi_matrix(&el, &basis, g.irrep())?.dense();
                    let pinv = pi_matrix(&el.inverse(), &basis, g.irrep())?.dense();
                    worst = worst.max(max_abs(&(&p * &r * &pinv - &r)));
                    worst = worst.max(g.irrep().coadjoint(&k, &base).distance(&base));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.moment_map",
            "closed-form S(dpi(X))(z, phi) = i <Psi(z, phi), X>",
            1e-12,
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..10 {
                    let x = random_algebra(rng, &g)?;
                    let z = random_point(rng, n, 2.0 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let target = C64::new(0.0, g.psi(&z, &phi)?.pair(&x, g.irrep())?);
                    worst = worst.max(rel(g.symbol_dpi_closed(&x, &z, &phi)?, target));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.berezin_dpi",
            "S of the truncated dpi(X) matrix matches i <Psi(z, phi), X>",
            1e-8,
            move |rng| {
                let basis = g.basis(cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let x = random_algebra(rng, &g)?;
                    let z = random_point(rng, n, 0.5 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let m = dpi_matrix(&x, &basis, g.irrep())?;
                    let target = C64::new(0.0, g.psi(&z, &phi)?.pair(&x, g.irrep())?);
                    worst = worst.max(rel(g.berezin_s(&m, &z, &phi, BerezinOptions::default())?, target));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.psi_equivariance",
            "Psi(g.(z, phi)) = Ad*(g) Psi(z, phi)",
            1e-10,
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..20 {
                    let r = rng.gen_range(0.0..1.0) * lambda.sqrt();
                    let el = random_element(rng, &g, r)?;
                    let z = random_point(rng, n, lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let (gz, gphi) = g.act(&el, &z, &phi)?;
                    let lhs = g.psi(&gz, &gphi)?;
                    let rhs = coadjoint(&el, &g.psi(&z, &phi)?, g.irrep())?;
                    worst = worst.max(lhs.distance(&rhs));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.w_dpi_decomposition",
            "closed, three-term and trace-pairing values of W(dpi(X)) agree",
            1e-8,
            move |rng| {
                let basis = g.basis(cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let x = random_algebra(rng, &g)?;
                    let z = random_point(rng, n, 0.3 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let closed = g.w_dpi_closed(&x, &z, &phi)?;
                    worst = worst.max(rel(g.w_dpi_decomposed(&x, &z, &phi)?, closed));
                    worst = worst.max(rel(g.w_dpi_trace(&x, &z, &phi, &basis, 4)?, closed));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.constant_term",
            "trace pairing of dpi(0,0,A) carries the constant Tr(A)/2",
            1e-8,
            move |rng| {
                let basis = g.basis(cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let mut x = random_algebra(rng, &g)?;
                    x.v = vec![C64::new(0.0, 0.0); n];
                    x.c = 0.0;
                    let z = random_point(rng, n, 0.3 * lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    worst = worst.max(rel(g.w_dpi_trace(&x, &z, &phi, &basis, 4)?, g.w_dpi_closed(&x, &z, &phi)?));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        // su(2) is traceless, so only the u1 factor separates the two constants
        if (lambda - 1.0).abs() > 1e-9 && group.irrep().name() == "u1" {
            let g = group.clone();
            out.push(CheckSpec::new(
                "motion.constant_term_discriminates",
                "trace pairing stays away from the Tr(A)/2 lambda variant",
                1e-5,
                move |rng| {
                    let basis = g.basis(cutoff)?;
                    let mut least = f64::INFINITY;
                    for _ in 0..3 {
                        let mut x = random_algebra(rng, &g)?;
                        x.v = vec![C64::new(0.0, 0.0); n];
                        x.c = 0.0;
                        let z = random_point(rng, n, 0.3 * lambda.sqrt());
                        let phi = g.irrep().random_point(rng);
                        let tr = g.w_dpi_trace(&x, &z, &phi, &basis, 4)?;
                        least = least.min((tr - g.w_dpi_closed_printed_constant(&x, &z, &phi)?).norm());
                    }
                    Ok(Outcome::Separation(least))
                },
            ));
        }

        let g = group.clone();
        out.push(CheckSpec::new(
            "motion.w_routes",
            "W by factored formula, trace pairing and kernel integral agree",
            1e-6,
            move |rng| {
                let basis = g.basis(3.min(cutoff))?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let a = random_product(rng, &basis, dim_v, 2, 2)?;
                    let z = random_point(rng, n, lambda.sqrt());
                    let phi = g.irrep().random_point(rng);
                    let w = g.w_symbol(&a, &z, &phi)?;
                    let t = g.w_symbol_trace(&a, &z, &phi)?;
                    let i = g.w_symbol_integral(&a, &z, &phi, &g.integral_grid(&a, &z)?)?;
                    worst = worst.max(rel(t, w)).max(rel(i, w));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        Ok(out)
    }
}
