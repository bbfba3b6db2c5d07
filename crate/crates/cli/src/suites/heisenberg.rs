use rand::Rng;
use swcorr::fock::FockBasis;
use swcorr::heisenberg::{dpi0_matrix, g0_multiply, parity_matrix, pi0_matrix, HeisenbergAlgebraElement};
use swcorr::linalg::{leading_block, op_norm};
use swcorr::{CMatrix, C64};

use super::{certify, interior_degree, random_c64, random_heisenberg_at, CheckSpec, Outcome, Suite};
use crate::config::RunConfig;
use crate::error::CliError;

pub struct HeisenbergSuite;

fn random_algebra(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> HeisenbergAlgebraElement {
    HeisenbergAlgebraElement::new((0..n).map(|_| random_c64(rng, 1.0)).collect(), rng.gen_range(-1.0..1.0))
}

impl Suite for HeisenbergSuite {
    fn name(&self) -> &'static str {
        "heisenberg"
    }

    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError> {
        let (n, lambda, cutoff) = (cfg.n, cfg.lambda, cfg.cutoff);
        let mut out = Vec::new();

        out.push(CheckSpec::new(
            "heisenberg.homomorphism",
            "pi0(g) pi0(h) = pi0(gh) on the interior block",
            1e-6,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let g = random_heisenberg_at(rng, n, 0.25 * lambda.sqrt());
                let h = random_heisenberg_at(rng, n, 0.25 * lambda.sqrt());
                let gh = g0_multiply(&g, &h)?;
                for e in [&g, &h, &gh] {
                    if let Some(d) = certify(e, &basis)? {
                        return Ok(Outcome::Uncertified(d));
                    }
                }
                let lhs = pi0_matrix(&g, &basis)?.compose(&pi0_matrix(&h, &basis)?)?;
                let rhs = pi0_matrix(&gh, &basis)?;
                let k = basis.block_dim(interior_degree(cutoff));
                Ok(Outcome::Error(op_norm(&leading_block(&(lhs.matrix() - rhs.matrix()), k))))
            },
        ));

        out.push(CheckSpec::new(
            "heisenberg.commutation",
            "[dpi0(X_k), dpi0(Y_k)] = dpi0(Z) = i lambda below the top two degrees",
            1e-10,
            move |_| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let k = basis.block_dim(cutoff - 2);
                let z = dpi0_matrix(&HeisenbergAlgebraElement::z(n), &basis)?;
                let ilam = CMatrix::identity(k, k) * C64::new(0.0, lambda);
                let mut worst = op_norm(&(leading_block(z.matrix(), k) - &ilam));
                for j in 0..n {
                    let x = dpi0_matrix(&HeisenbergAlgebraElement::x(n, j), &basis)?;
                    let y = dpi0_matrix(&HeisenbergAlgebraElement::y(n, j), &basis)?;
                    let c = x.matrix() * y.matrix() - y.matrix() * x.matrix();
                    worst = worst.max(op_norm(&(leading_block(&c, k) - &ilam)));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "heisenberg.skew_adjoint",
            "dpi0(X) is skew-adjoint on the interior block",
            1e-12,
            move |rng| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let k = basis.block_dim(cutoff - 1);
                let mut worst: f64 = 0.0;
                for _ in 0..5 {
                    let m = dpi0_matrix(&random_algebra(rng, n), &basis)?;
                    let b = leading_block(m.matrix(), k);
                    worst = worst.max(op_norm(&(&b + b.adjoint())));
                }
                Ok(Outcome::Error(worst))
            },
        ));

        out.push(CheckSpec::new(
            "heisenberg.parity_grading",
            "R0 commutes with dpi0(Z) and anticommutes with dpi0(X_k), dpi0(Y_k)",
            1e-12,
            move |_| {
                let basis = FockBasis::new(n, lambda, cutoff)?;
                let r = parity_matrix(&basis);
                let r = r.matrix();
                let z = dpi0_matrix(&HeisenbergAlgebraElement::z(n), &basis)?;
                let mut worst = op_norm(&(r * z.matrix() - z.matrix() * r));
                for j in 0..n {
                    for x in [HeisenbergAlgebraElement::x(n, j), HeisenbergAlgebraElement::y(n, j)] {
                        let m = dpi0_matrix(&x, &basis)?;
                        worst = worst.max(op_norm(&(r * m.matrix() + m.matrix() * r)));
                    }
                }
                Ok(Outcome::Error(worst))
            },
        ));

        Ok(out)
    }
}
