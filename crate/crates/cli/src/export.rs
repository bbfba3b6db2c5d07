//! Tabular exports: symbol samples and moment-map samples.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use swcorr::compact::OrbitPoint;
use swcorr::diffop::DiffOperator;
use swcorr::fock::FockBasis;
use swcorr::heisenberg::HeisenbergAlgebraElement;
use swcorr::motion::{coadjoint, MotionElement, MotionGroup};
use swcorr::C64;

use crate::calculus::CalculusRegistry;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::operator::{parse, OperatorSpec};

/// A table of rows with a leading comment line.
pub struct Table {
    pub comment: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn write(&self, out: &Path) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", out.display()));
        let file = File::create(out).map_err(io)?;
        let mut w = BufWriter::new(file);
        writeln!(w, "# {}", self.comment).map_err(io)?;
        let mut csv = csv::Writer::from_writer(w);
        let csv_err = |e: csv::Error| CliError::Io(format!("{}: {e}", out.display()));
        csv.write_record(&self.header).map_err(csv_err)?;
        for row in &self.rows {
            csv.write_record(row.iter().map(|x| format!("{x:?}"))).map_err(csv_err)?;
        }
        csv.flush().map_err(io)?;
        Ok(())
    }
}

fn z_columns(n: usize) -> Vec<String> {
    (1..=n).flat_map(|k| [format!("z{k}_re"), format!("z{k}_im")]).collect()
}

fn z_values(z: &[C64]) -> Vec<f64> {
    z.iter().flat_map(|w| [w.re, w.im]).collect()
}

/// Sample points: a `points × points` square grid on `[−r, r]²` for
/// `n = 1`, and `points²` seeded uniform samples of `[−r, r]^{2n}` otherwise.
pub fn sample_points(n: usize, points: usize, radius: f64, seed: u64) -> Vec<Vec<C64>> {
    let points = points.max(1);
    if n == 1 {
        let step = |i: usize| {
            if points == 1 {
                0.0
            } else {
                -radius + 2.0 * radius * i as f64 / (points - 1) as f64
            }
        };
        let mut out = Vec::with_capacity(points * points);
        for a in 0..points {
            for b in 0..points {
                out.push(vec![C64::new(step(a), step(b))]);
            }
        }
        out
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..points * points)
            .map(|_| {
                (0..n)
                    .map(|_| C64::new(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius)))
                    .collect()
            })
            .collect()
    }
}

fn polar_angles(phi: &OrbitPoint) -> [f64; 2] {
    let c = &phi.coords;
    let r = phi.norm();
    [(c[2] / r).clamp(-1.0, 1.0).acos(), c[1].atan2(c[0])]
}

/// `symbol` subcommand: samples of `S₀`/`W₀` for Fock operators, or of
/// `S`/`W` for `dpi` and `tensor` operators.
pub fn symbol_table(cfg: &RunConfig, target: &str, operator: &str, points: usize, radius: f64) -> Result<Table, CliError> {
    let registry = CalculusRegistry::standard();
    let calc = registry.get(target)?;
    let trimmed = operator.trim();
    let product = trimmed.starts_with("tensor(") || trimmed.starts_with("dpi ");
    let group = if product {
        Some(MotionGroup::new(cfg.irrep()?, cfg.lambda, cfg.sphere_order)?)
    } else {
        None
    };
    let n = group.as_ref().map_or(cfg.n, |g| g.n());
    let spec = parse(trimmed, n)?;
    let basis = FockBasis::new(n, cfg.lambda, cfg.cutoff)?;
    let zs = sample_points(n, points, radius, cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let orbit_cols = group.as_ref().is_some_and(|g| g.irrep().orbit_radius() > 0.0 && g.irrep().name() == "su2");

    let mut header = z_columns(n);
    if orbit_cols {
        header.push("orbit_theta".into());
        header.push("orbit_phi".into());
    }
    header.push("value_re".into());
    header.push("value_im".into());

    let mut rows = Vec::with_capacity(zs.len());
    for z in &zs {
        let mut row = z_values(z);
        let value = match (&spec, &group) {
            (OperatorSpec::Fock(f), _) => calc.fock_symbol(f, &basis, z)?,
            (OperatorSpec::Tensor(f, m), Some(g)) => {
                let phi = g.irrep().random_point(&mut rng);
                if orbit_cols {
                    row.extend(polar_angles(&phi));
                }
                calc.fock_symbol(f, &basis, z)? * calc.compact_symbol(g, m, &phi)?
            }
            (OperatorSpec::Dpi { v, c, a }, Some(g)) => {
                let phi = g.irrep().random_point(&mut rng);
                if orbit_cols {
                    row.extend(polar_angles(&phi));
                }
                let x = HeisenbergAlgebraElement::new(v.clone(), *c);
                let d = DiffOperator::dpi0(&x, cfg.lambda).plus(&DiffOperator::dtau(a, cfg.lambda));
                calc.diff_symbol(&d, z) + calc.compact_symbol(g, &g.irrep().drho(a)?, &phi)?
            }
            _ => unreachable!("product specs always build a group"),
        };
        row.push(value.re);
        row.push(value.im);
        rows.push(row);
    }
    Ok(Table {
        comment: format!(
            "lambda={},n={},cutoff={},target={},operator={}",
            cfg.lambda, n, cfg.cutoff, target, trimmed
        ),
        header,
        rows,
    })
}

/// `orbit` subcommand: samples of `(z, φ)`, `Ψ(z, φ)` and the residual
/// `|Ψ(g·(z,φ)) − Ad*(g)Ψ(z,φ)|` for a random `g` per row. The first row is
/// the base point `(0, φ₀)`.
pub fn orbit_table(cfg: &RunConfig, count: usize) -> Result<Table, CliError> {
    let group = MotionGroup::new(cfg.irrep()?, cfg.lambda, cfg.sphere_order)?;
    let irrep = group.irrep();
    let n = group.n();
    let dual_dim = irrep.algebra_basis().len();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = cfg.lambda.sqrt();

    let mut header = z_columns(n);
    header.extend((1..=dual_dim).map(|a| format!("phi{a}")));
    header.extend((1..=n).flat_map(|k| [format!("u{k}_re"), format!("u{k}_im")]));
    header.push("d".into());
    header.extend((1..=dual_dim).map(|a| format!("psi_phi{a}")));
    header.push("residual".into());

    let mut rows = Vec::with_capacity(count);
    for i in 0..count {
        let (z, phi) = if i == 0 {
            (vec![C64::new(0.0, 0.0); n], irrep.base_point())
        } else {
            let z: Vec<C64> = (0..n)
                .map(|_| C64::new(rng.gen_range(-r..r), rng.gen_range(-r..r)))
                .collect();
            (z, irrep.random_point(&mut rng))
        };
        let z0: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let g = MotionElement::new(z0, rng.gen_range(-1.0..1.0), irrep.random_element(&mut rng))?;
        let xi = group.psi(&z, &phi)?;
        let (gz, gphi) = group.act(&g, &z, &phi)?;
        let residual = group.psi(&gz, &gphi)?.distance(&coadjoint(&g, &xi, irrep)?);

        let mut row = z_values(&z);
        row.extend(&phi.coords);
        row.extend(z_values(&xi.u));
        row.push(xi.d);
        row.extend(&xi.phi.coords);
        row.push(residual);
        rows.push(row);
    }
    Ok(Table {
        comment: format!(
            "lambda={},n={},cutoff={},group={}",
            cfg.lambda,
            n,
            cfg.cutoff,
            irrep.label()
        ),
        header,
        rows,
    })
}
