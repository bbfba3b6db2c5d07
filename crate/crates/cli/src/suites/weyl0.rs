use swcorr::diffop::{berezin_symbol_diffop, weyl_symbol_diffop, DiffOperator};
use swcorr::fock::{coherent_state, FockBasis, FockVector, MultiIndex};
use swcorr::heisenberg::{parity_matrix, phi_lambda, pi0_matrix, HeisenbergAlgebraElement};
use swcorr::linalg::{expm_skew, leading_block, max_abs, op_norm, trace_product};
use swcorr::motion::tau_matrix;
use swcorr::weyl::{
    dequantize, dequantize_grid, integral_grid, pairing_grid, quantizer0, weyl_symbol, weyl_symbol_dpi0,
    weyl_symbol_function, weyl_symbol_integral, weyl_symbol_regularized,
};
use swcorr::{CMatrix, C64};

use super::{
    certify, interior_degree, random_c64, random_heisenberg, random_matrix, random_operator, random_point, rel,
    CheckSpec, Outcome, Suite,
};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct Weyl0Suite;

fn small_indices(n: usize, d: usize) -> Vec<MultiIndex> {
    (0..=d).flat_map(|k| MultiIndex::of_degree(n, k)).collect()
}

fn random_unitary(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> CMatrix {
    let m = random_matrix(rng, n);
    expm_skew(&((&m - m.adjoint()) * C64::new(0.5, 0.0)))
}

impl Suite for Weyl0Suite {
    fn name(&self) -> &'static str {
        "weyl0"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let (n, lambda, cutoff) = (cfg.n, cfg.lambda, cfg.cutoff);
        let mut out = Vec::new();

        out.push(CheckSpec::new(
            "weyl0.parity_at_origin",
            "Omega0(0) is the parity operator",
            0.0,
            move |_| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let q = quantizer0(&vec![C64::new(0.0, 0.0); n], &basis)?;
                Ok(Outcome::Error(max_abs(&(q.matrix() - parity_matrix(&basis).matrix()))))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.eigen_relation",
            "Omega0(z) e_z = 2^n e_z",
            1e-6,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let z = random_point(rng, n, lambda.sqrt());
                    let e = coherent_state(&z, &basis)?;
                    let qe = quantizer0(&z, &basis)?.apply(&e)?;
                    let scale = 2f64.powi(n as i32);
                    let diff: Vec<C64> = qe.coeffs().iter().zip(e.coeffs()).map(|(a, b)| a - b * scale).collect();
                    worst = worst.max(FockVector::new(&basis, diff)?.norm() / e.norm());
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.covariance",
            "Omega0(g.z) = pi0(g) Omega0(z) pi0(g)^-1 on the interior block",
            1e-6,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let k = basis.block_dim(interior_degree(cutoff));
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let g = random_heisenberg(rng, n, lambda);
                    if let Some(d) = certify(&g, &basis)? {
                        return Ok(Outcome::Uncertified(d));
                    }
                    let z = random_point(rng, n, 0.5 * lambda.sqrt());
                    let lhs = quantizer0(&g.act(&z, lambda), &basis)?;
                    let p = pi0_matrix(&g, &basis)?;
                    let pinv = pi0_matrix(&g.inverse(), &basis)?;
                    let rhs = p.compose(&quantizer0(&z, &basis)?)?.compose(&pinv)?;
                    worst = worst.max(op_norm(&leading_block(&(lhs.matrix() - rhs.matrix()), k)));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.traciality",
            "integral of W0(A) conj W0(B) equals Tr(A B^*)",
            1e-6,
            move |rng| {
                let s = 4.min(cutoff);
                let basis = FockBasis::new(n, lambda, s)?;
                let pairs = if n == 1 { 50 } else { 10 };
                let ops: Vec<_> = (0..2 * pairs).map(|_| random_operator(rng, &basis, s)).collect();
                let grid = pairing_grid(n, lambda, s)?;
                let mut acc = vec![C64::new(0.0, 0.0); pairs];
                for (w, wt) in grid.nodes().iter().zip(grid.weights()) {
                    let q = quantizer0(w, &basis)?;
                    let corr = wt / grid.density(w);
                    for (i, slot) in acc.iter_mut().enumerate() {
                        let wa = trace_product(ops[2 * i].matrix(), q.matrix());
                        let wb = trace_product(ops[2 * i + 1].matrix(), q.matrix());
                        *slot += wa * wb.conj() * corr;
                    }
                }
                let mut worst: f64 = 0.0;
                for (i, v) in acc.iter().enumerate() {
                    let exact = trace_product(ops[2 * i].matrix(), &ops[2 * i + 1].matrix().adjoint());
                    worst = worst.max((v - exact).norm());
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.reality",
            "W0(A^*) = conj W0(A)",
            1e-12,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff.min(8))?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let a = random_operator(rng, &basis, basis.cutoff());
                    let z = random_point(rng, n, lambda.sqrt());
                    worst = worst.max(rel(weyl_symbol(&a.adjoint(), &z)?, weyl_symbol(&a, &z)?.conj()));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.berezin_leading_terms",
            "W0(A_pq) - S0(A_pq) has strictly lower degree",
            1e-12,
            move |_| {
                let mut worst: f64 = 0.0;
                for p in small_indices(n, 3) {
                    for q in small_indices(n, 3) {
                        let diff = weyl_symbol_diffop(&p, &q, lambda).minus(&berezin_symbol_diffop(&p, &q, lambda));
                        let top = p.degree() + q.degree();
                        for ((a, b), c) in diff.terms() {
                            if a.degree() + b.degree() >= top {
                                worst = worst.max(c.norm());
                            }
                        }
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.k_rotation",
            "W0(tau(k)^-1 A tau(k))(z) = W0(A)(kz)",
            1e-10,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff.min(8))?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let k = random_unitary(rng, n);
                    let t = tau_matrix(&k, &basis)?;
                    let tinv = tau_matrix(&k.adjoint(), &basis)?;
                    let a = random_operator(rng, &basis, basis.cutoff());
                    let conj = tinv.compose(&a)?.compose(&t)?;
                    let z = random_point(rng, n, lambda.sqrt());
                    let kz: Vec<C64> = (k.clone() * swcorr::CVector::from_vec(z.clone())).iter().copied().collect();
                    worst = worst.max(rel(weyl_symbol(&conj, &z)?, weyl_symbol(&a, &kz)?));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.closed_vs_integral",
            "closed-form symbols of z^p d^q agree with the kernel integral",
            1e-9,
            move |rng| {
                let r = 2.0 * lambda.sqrt();
                let points: Vec<Vec<C64>> = (0..5).map(|_| random_point(rng, n, r)).collect();
                let mut worst: f64 = 0.0;
                for p in small_indices(n, 3) {
                    for q in small_indices(n, 3) {
                        let d = DiffOperator::monomial(p.clone(), q.clone(), lambda)?;
                        let closed = weyl_symbol_diffop(&p, &q, lambda);
                        for z in &points {
                            let v = weyl_symbol_integral(&d, z, &integral_grid(&d, z)?)?;
                            worst = worst.max(rel(v, closed.eval(z)));
                        }
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.regularized_trace",
            "regularized trace pairing of z d/dz matches its closed form",
            1e-9,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let mut worst: f64 = 0.0;
                for k in 0..n {
                    let e = MultiIndex::unit(n, k);
                    let d = DiffOperator::monomial(e.clone(), e.clone(), lambda)?;
                    let m = d.matrix(&basis)?;
                    let closed = weyl_symbol_diffop(&e, &e, lambda);
                    for _ in 0..3 {
                        let z = random_point(rng, n, 0.5 * lambda.sqrt());
                        worst = worst.max(rel(weyl_symbol_regularized(&m, &z, 4)?, closed.eval(&z)));
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.adapted",
            "W0(dpi0(X))(z) = i <Phi(z), X>",
            1e-12,
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..10 {
                    let x = HeisenbergAlgebraElement::new((0..n).map(|_| random_c64(rng, 1.0)).collect(), random_c64(rng, 1.0).re);
                    let z = random_point(rng, n, 2.0 * lambda.sqrt());
                    let target = C64::new(0.0, phi_lambda(&z, lambda).pair(&x)?);
                    worst = worst.max(rel(weyl_symbol_dpi0(&x, &z, lambda)?, target));
                    worst = worst.max(rel(DiffOperator::dpi0(&x, lambda).weyl_symbol().eval(&z), target));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "weyl0.round_trip",
            "dequantizing W0(A) recovers A",
            1e-6,
            move |rng| {
                let s = if n == 1 { 4.min(cutoff) } else { 2.min(cutoff) };
                let basis = FockBasis::new(n, lambda, s)?;
                let mut worst: f64 = 0.0;
                for _ in 0..3 {
                    let a = random_operator(rng, &basis, s);
                    let f = weyl_symbol_function(&a);
                    let grid = dequantize_grid(&f, &basis)?;
                    let back = dequantize(&f, &grid, &basis)?;
                    worst = worst.max(op_norm(&(back.matrix() - a.matrix())));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        Ok(out)
    }
}
