use swcorr::berezin::{berezin_symbol, BerezinOptions};
use swcorr::fock::{FockBasis, FockOperator};
use swcorr::heisenberg::pi0_matrix;
use swcorr::linalg::hs_norm;
use swcorr::quadrature::plane_grid;
use swcorr::{CMatrix, C64};

use super::{certify, interior_degree, random_heisenberg, random_operator, random_point, rel, CheckSpec, Outcome, Suite};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct BerezinSuite;

impl Suite for BerezinSuite {
    fn name(&self) -> &'static str {
        "berezin"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let (n, lambda, cutoff) = (cfg.n, cfg.lambda, cfg.cutoff);
        let opts = BerezinOptions::default();
        let mut out = Vec::new();

        out.push(CheckSpec::new(
            "berezin.injectivity",
            "A -> S0(A) sampled at dim^2 generic points has full rank (reported: column-equilibrated condition number)",
            1e12,
            move |rng| {
                let c = if n == 1 { cutoff.min(6) } else { cutoff.min(3) };
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let d = basis.block_dim(c);
                let points: Vec<_> = (0..d * d).map(|_| random_point(rng, n, lambda.sqrt())).collect();
                let mut m = CMatrix::zeros(d * d, d * d);
                for p in 0..d {
                    for q in 0..d {
                        let unit = FockOperator::matrix_unit(&basis, basis.index(p), basis.index(q))?;
                        for (j, z) in points.iter().enumerate() {
                            m[(j, p * d + q)] = berezin_symbol(&unit, z, opts)?.value;
                        }
                    }
                }
                for mut col in m.column_iter_mut() {
                    let s = col.iter().map(|x| x.norm()).fold(0.0, f64::max);
                    col /= C64::new(s, 0.0);
                }
                let sv = m.singular_values();
                let max = sv.max();
                let min = sv.min();
                Ok(Outcome::Error(if min > 0.0 { max / min } else { f64::INFINITY }))
            },
        ));

        out.push(CheckSpec::new(
            "berezin.covariance",
            "S0(A)(g.z) = S0(pi0(g)^-1 A pi0(g))(z)",
            1e-6,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let g = random_heisenberg(rng, n, lambda);
                    if let Some(d) = certify(&g, &basis)? {
                        return Ok(Outcome::Uncertified(d));
                    }
                    let a = random_operator(rng, &basis, interior_degree(cutoff));
                    let z = random_point(rng, n, 0.5 * lambda.sqrt());
                    let p = pi0_matrix(&g, &basis)?;
                    let pinv = pi0_matrix(&g.inverse(), &basis)?;
                    let conj = pinv.compose(&a)?.compose(&p)?;
                    let lhs = berezin_symbol(&a, &g.act(&z, lambda), opts)?.value;
                    let rhs = berezin_symbol(&conj, &z, opts)?.value;
                    worst = worst.max(rel(rhs, lhs));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "berezin.l2_contraction",
            "L2 norm of S0(A) is at most the Hilbert-Schmidt norm of A",
            1e-8,
            move |rng| {
                // the outer grid nodes need a long coherent-state expansion
                let s = 2;
                let basis = FockBasis::new(n, lambda, if n == 1 { 30 } else { 36 })?;
                let grid = plane_grid(n, 2 * s + 1, lambda, lambda)?;
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let a = random_operator(rng, &basis, s);
                    let mut failure = None;
                    let v = grid.integrate(|w| match berezin_symbol(&a, w, opts) {
                        Ok(sv) => sv.value.norm_sqr().into(),
                        Err(e) => {
                            failure = Some(e);
                            0.0.into()
                        }
                    });
                    if let Some(e) = failure {
                        return Err(e);
                    }
                    worst = worst.max(v.re.sqrt() - hs_norm(a.matrix()));
                }
                Ok(Outcome::Error(worst.max(0.0)))
            },
        ));

        Ok(out)
    }
}
