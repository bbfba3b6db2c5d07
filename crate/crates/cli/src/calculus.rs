//! Symbol calculi selectable by name: `berezin` (`S₀`, `S`) and `weyl`
//! (`W₀`, `W`).

use swcorr::berezin::{berezin_symbol, BerezinOptions};
use swcorr::compact::OrbitPoint;
use swcorr::diffop::DiffOperator;
use swcorr::fock::{FockBasis, FockOperator};
use swcorr::motion::MotionGroup;
use swcorr::weyl::weyl_symbol;
use swcorr::{CMatrix, C64};

use crate::error::CliError;
use crate::operator::FockSpec;

pub trait SymbolCalculus: Send + Sync {
    fn name(&self) -> &'static str;

    /// Closed-form symbol of a polynomial-coefficient differential operator.
    fn diff_symbol(&self, d: &DiffOperator, z: &[C64]) -> C64;

    /// Symbol of a truncated matrix at `z`.
    fn matrix_symbol(&self, a: &FockOperator, z: &[C64]) -> Result<C64, CliError>;

    /// Symbol of a Fock-space operator at `z`, by closed form when one exists.
    fn fock_symbol(&self, op: &FockSpec, basis: &FockBasis, z: &[C64]) -> Result<C64, CliError> {
        match op.diff_operator(basis.n(), basis.lambda()) {
            Some(d) => Ok(self.diff_symbol(&d, z)),
            None => self.matrix_symbol(&op.matrix(basis)?, z),
        }
    }

    /// Symbol of an operator on `V` at `φ`.
    fn compact_symbol(&self, group: &MotionGroup, a1: &CMatrix, phi: &OrbitPoint) -> Result<C64, CliError>;
}

pub struct Berezin;

pub struct Weyl;

impl SymbolCalculus for Berezin {
    fn name(&self) -> &'static str {
        "berezin"
    }

    fn diff_symbol(&self, d: &DiffOperator, z: &[C64]) -> C64 {
        d.berezin_symbol().eval(z)
    }

    fn matrix_symbol(&self, a: &FockOperator, z: &[C64]) -> Result<C64, CliError> {
        Ok(berezin_symbol(a, z, BerezinOptions::default())?.value)
    }

    fn compact_symbol(&self, group: &MotionGroup, a1: &CMatrix, phi: &OrbitPoint) -> Result<C64, CliError> {
        Ok(group.irrep().berezin_symbol_k(a1, phi)?)
    }
}

impl SymbolCalculus for Weyl {
    fn name(&self) -> &'static str {
        "weyl"
    }

    fn diff_symbol(&self, d: &DiffOperator, z: &[C64]) -> C64 {
        d.weyl_symbol().eval(z)
    }

    fn matrix_symbol(&self, a: &FockOperator, z: &[C64]) -> Result<C64, CliError> {
        Ok(weyl_symbol(a, z)?)
    }

    fn compact_symbol(&self, group: &MotionGroup, a1: &CMatrix, phi: &OrbitPoint) -> Result<C64, CliError> {
        Ok(group.swc().w1(a1, phi)?)
    }
}

/// Name-indexed symbol calculi.
pub struct CalculusRegistry {
    entries: Vec<Box<dyn SymbolCalculus>>,
}

impl CalculusRegistry {
    pub fn standard() -> Self {
        CalculusRegistry {
            entries: vec![Box::new(Berezin), Box::new(Weyl)],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn SymbolCalculus, CliError> {
        self.entries
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| CliError::Config(format!("unknown symbol target '{name}' (expected one of {:?})", self.names())))
    }
}
