//! Named verification suites. Every check draws from its own generator
//! seeded by the run seed and the check name, so results do not depend on
//! scheduling.

mod berezin;
mod compact;
mod fock;
mod heisenberg;
mod motion;

mod weyl0;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use swcorr::fock::{FockBasis, FockOperator};
use swcorr::heisenberg::{unitarity_defect, HeisenbergElement};
use swcorr::{CMatrix, C64};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::{Check, Report};

/// Above this unitarity defect a covariance check is not evaluated.
pub const CERTIFICATION_THRESHOLD: f64 = 1e-8;

pub const GATE_NOTE: &str = "unitarity_defect exceeds certification threshold";

/// Result of evaluating one check.
pub enum Outcome {
    /// Measured error.
    Error(f64),
    /// Measured separation that must stay at or above the tolerance.
    Separation(f64),
    /// The truncation could not be certified; carries the defect.
    Uncertified(f64),
}

type Eval = Box<dyn Fn(&mut ChaCha8Rng) -> swcorr::Result<Outcome> + Send + Sync>;

pub struct CheckSpec {
    pub name: String,
    pub reference: &'static str,
    pub tolerance: f64,
    eval: Eval,
}

impl CheckSpec {
    pub fn new<F>(name: &str, reference: &'static str, tolerance: f64, eval: F) -> Self
    where
        F: Fn(&mut ChaCha8Rng) -> swcorr::Result<Outcome> + Send + Sync + 'static,
    {
        CheckSpec {
            name: name.to_string(),
            reference,
            tolerance,
            eval: Box::new(eval),
        }
    }

    fn run(&self, seed: u64, factor: f64) -> Check {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(&self.name));
        let tol = self.tolerance * factor;
        match (self.eval)(&mut rng) {
            Ok(Outcome::Error(v)) => Check::new(&self.name, self.reference, v, tol),
            Ok(Outcome::Separation(v)) => Check::separation(&self.name, self.reference, v, self.tolerance),
            Ok(Outcome::Uncertified(defect)) => {
                let mut c = Check::failed(&self.name, self.reference, CERTIFICATION_THRESHOLD, GATE_NOTE);
                c.value = defect;
                c
            }
            Err(e) => Check::failed(&self.name, self.reference, tol, e.to_string()),
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn checks(&self, cfg: &RunConfig) -> Result<Vec<CheckSpec>, CliError>;
}

/// Name-indexed suites.
pub struct SuiteRegistry {
    entries: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn standard() -> Self {
        SuiteRegistry {
            entries: vec![
                Box::new(fock::FockSuite),
                Box::new(heisenberg::HeisenbergSuite),
                Box::new(berezin::BerezinSuite),
                Box::new(weyl0::Weyl0Suite),
                Box::new(compact::CompactSuite),
                Box::new(motion::MotionSuite),

            ],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite, CliError> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| {
                CliError::Config(format!("unknown suite '{name}' (known: {})", self.names().join(", ")))
            })
    }
}

/// Runs `names` (all suites when empty) and assembles the report.
pub fn run_suites(cfg: &RunConfig, names: &[String]) -> Result<Report, CliError> {
    let registry = SuiteRegistry::standard();
    let names: Vec<String> = if names.is_empty() {
        registry.names().iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    let mut specs = Vec::new();
    for name in &names {
        let suite = registry.get(name)?;
        let factor = cfg.tolerance_factor(suite.name());
        specs.extend(suite.checks(cfg)?.into_iter().map(|c| (c, factor)));
    }
    let checks: Vec<Check> = specs.par_iter().map(|(c, f)| c.run(cfg.seed, *f)).collect();
    Ok(Report::new(cfg.clone(), names, checks))
}

/// `Some(defect)` when `π₀(g)` fails certification on `basis`.
pub(crate) fn certify(g: &HeisenbergElement, basis: &FockBasis) -> swcorr::Result<Option<f64>> {
    let probe = 4.min(basis.cutoff() / 4);
    let d = unitarity_defect(g, basis, probe)?;
    Ok((d > CERTIFICATION_THRESHOLD).then_some(d))
}

/// Probe degree for interior-block comparisons.
pub(crate) fn interior_degree(cutoff: usize) -> usize {
    4.min(cutoff / 4)
}

pub(crate) fn random_c64(rng: &mut ChaCha8Rng, r: f64) -> C64 {
    C64::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

/// Uniform point of the ball `|z| ≤ r` in `ℂⁿ`.
pub(crate) fn random_point(rng: &mut ChaCha8Rng, n: usize, r: f64) -> Vec<C64> {
    loop {
        let z: Vec<C64> = (0..n).map(|_| random_c64(rng, r)).collect();
        if z.iter().map(|w| w.norm_sqr()).sum::<f64>() <= r * r {
            return z;
        }
    }
}

/// A point on the sphere `|z| = r`.
pub(crate) fn random_sphere_point(rng: &mut ChaCha8Rng, n: usize, r: f64) -> Vec<C64> {
    let z = random_point(rng, n, 1.0);
    let norm = z.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt().max(1e-300);
    z.iter().map(|w| w * (r / norm)).collect()
}

/// `(z₀, c₀)` with `|z₀| = 0.5√λ`.
pub(crate) fn random_heisenberg(rng: &mut ChaCha8Rng, n: usize, lambda: f64) -> HeisenbergElement {
    random_heisenberg_at(rng, n, 0.5 * lambda.sqrt())
}

pub(crate) fn random_heisenberg_at(rng: &mut ChaCha8Rng, n: usize, r: f64) -> HeisenbergElement {
    HeisenbergElement::new(random_sphere_point(rng, n, r), rng.gen_range(-1.0..1.0))
}

/// A random operator supported on the degree-`≤ support` block.
pub(crate) fn random_operator(rng: &mut ChaCha8Rng, basis: &FockBasis, support: usize) -> FockOperator {
    let k = basis.block_dim(support.min(basis.cutoff()));
    let m = CMatrix::from_fn(basis.dim(), basis.dim(), |i, j| {
        if i < k && j < k {
            random_c64(rng, 1.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    FockOperator::new(basis, m).expect("dimension matches basis")
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| random_c64(rng, 1.0))
}

/// `|a − b| / max(1, |b|)`.
pub(crate) fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}
