//! Run configuration: a JSON document, with command-line overrides.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use swcorr::compact::{CompactIrrep, IrrepParams, IrrepRegistry};

use crate::error::CliError;

pub const SUITE_NAMES: [&str; 6] = ["fock", "heisenberg", "berezin", "weyl0", "compact", "motion"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub lambda: f64,
    /// Dimension of the Heisenberg suites; the motion suite uses the
    /// ambient dimension of `group`.
    pub n: usize,
    pub cutoff: usize,
    pub group: String,
    pub j: f64,
    /// Character of the `u1` group.
    pub charge: i32,
    pub plane_order: usize,
    /// `0` selects the smallest order that builds `w₁` exactly.
    pub sphere_order: usize,
    /// Per-suite multipliers applied to every tolerance in that suite.
    pub tol: BTreeMap<String, f64>,
    pub tol_scale: f64,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lambda: 1.0,
            n: 1,
            cutoff: 16,
            group: "su2".into(),
            j: 0.5,
            charge: 0,
            plane_order: 20,
            sphere_order: 0,
            tol: BTreeMap::new(),
            tol_scale: 1.0,
            seed: 1,
        }
    }
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("invalid config {}: {e}", path.display())))
    }

    pub fn irrep_params(&self) -> IrrepParams {
        IrrepParams {
            j: self.j,
            charge: self.charge,
        }
    }

    pub fn irrep(&self) -> Result<std::sync::Arc<dyn CompactIrrep>, CliError> {
        IrrepRegistry::standard()
            .build(&self.group, &self.irrep_params())
            .map_err(|e| CliError::Config(e.to_string()))
    }

    /// Checks the invariants and fills in derived defaults.
    pub fn validated(mut self) -> Result<Self, CliError> {
        let bad = |msg: String| Err(CliError::Config(msg));
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return bad(format!("lambda must be positive, got {}", self.lambda));
        }
        if !(1..=2).contains(&self.n) {
            return bad(format!("n must be 1 or 2, got {}", self.n));
        }
        if self.cutoff < 4 {
            return bad(format!("cutoff must be at least 4, got {}", self.cutoff));
        }
        if self.plane_order == 0 {
            return bad("plane_order must be positive".into());
        }
        if !(self.tol_scale > 0.0 && self.tol_scale.is_finite()) {
            return bad(format!("tol_scale must be positive, got {}", self.tol_scale));
        }
        for (name, t) in &self.tol {
            if !SUITE_NAMES.contains(&name.as_str()) {
                return bad(format!("tolerance given for unknown suite '{name}'"));
            }
            if !(*t > 0.0 && t.is_finite()) {
                return bad(format!("tolerance for '{name}' must be positive, got {t}"));
            }
        }
        self.group = self.group.to_ascii_lowercase();
        let irrep = self.irrep()?;
        let min_order = irrep.min_grid_order();
        if self.sphere_order == 0 {
            self.sphere_order = min_order.max(1);
        } else if self.sphere_order < min_order {
            return bad(format!(
                "sphere_order must be at least 4j+2 = {min_order}, got {}",
                self.sphere_order
            ));
        }
        Ok(self)
    }

    /// Multiplier applied to the tolerances of `suite`.
    pub fn tolerance_factor(&self, suite: &str) -> f64 {
        self.tol_scale * self.tol.get(suite).copied().unwrap_or(1.0)
    }
}
