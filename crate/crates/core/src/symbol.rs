//! Symbol representations: polynomial symbols `Σ c_{ab} z^a z̄^b` and
//! opaque symbol functions tagged with how they were produced.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::fock::MultiIndex;
use crate::linalg::{pairwise_sum, C64};

/// `Σ c_{ab} z^a z̄^b`, finitely supported.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PolynomialSymbol {
    coefficients: BTreeMap<(MultiIndex, MultiIndex), C64>,
}

impl PolynomialSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(n: usize, value: C64) -> Self {
        let mut s = Self::zero();
        s.add_term(MultiIndex::zero(n), MultiIndex::zero(n), value);
        s
    }

    pub fn add_term(&mut self, a: MultiIndex, b: MultiIndex, c: C64) {
        let entry = self.coefficients.entry((a, b)).or_insert(C64::new(0.0, 0.0));
        *entry += c;
    }

    pub fn coefficient(&self, a: &MultiIndex, b: &MultiIndex) -> C64 {
        self.coefficients
            .get(&(a.clone(), b.clone()))
            .copied()
            .unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &C64)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, z: &[C64]) -> C64 {
        let terms: Vec<C64> = self
            .coefficients
            .iter()
            .map(|((a, b), c)| c * a.monomial(z) * b.conj_monomial(z))
            .collect();
        pairwise_sum(&terms)
    }

    pub fn scaled(&self, s: C64) -> Self {
        PolynomialSymbol {
            coefficients: self.coefficients.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.coefficients {
            out.add_term(a.clone(), b.clone(), *c);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(C64::new(-1.0, 0.0)))
    }

    /// Drop coefficients with modulus `≤ tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        PolynomialSymbol {
            coefficients: self
                .coefficients
                .iter()
                .filter(|(_, c)| c.norm() > tol)
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }

    /// Largest total degree `|a| + |b|` among the terms.
    pub fn total_degree(&self) -> Option<usize> {
        self.coefficients.keys().map(|(a, b)| a.degree() + b.degree()).max()
    }

    /// Real-valued iff `c_{ba} = conj(c_{ab})`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coefficients.iter().all(|((a, b), c)| {
            let mirrored = self.coefficient(b, a);
            (mirrored - c.conj()).norm() <= tol
        })
    }
}

impl fmt::Display for PolynomialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|((a, b), c)| format!("({:.6}{:+.6}i)·z^[{a}]·z̄^[{b}]", c.re, c.im))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// How a symbol function was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    TracePairing,
    IntegralOracle,
    ClosedForm,
    Samples,
}

/// Shape information needed to pick an exact quadrature for the symbol.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymbolProfile {
    /// Polynomial degree of the symbol (after removing any Gaussian factor).
    pub degree: usize,
    /// Whether the symbol carries a factor `e^{-|z|²/λ}`.
    pub gaussian: bool,
}

type Evaluator = Arc<dyn Fn(&[C64]) -> C64 + Send + Sync>;

/// A function `ℂⁿ → ℂ` with its provenance and shape.
#[derive(Clone)]
pub struct SymbolFunction {
    evaluator: Evaluator,
    pub provenance: Provenance,
    pub profile: SymbolProfile,
}

impl SymbolFunction {
    pub fn new<F>(f: F, provenance: Provenance, profile: SymbolProfile) -> Self
    where
        F: Fn(&[C64]) -> C64 + Send + Sync + 'static,
    {
        SymbolFunction {
            evaluator: Arc::new(f),
            provenance,
            profile,
        }
    }

    pub fn from_polynomial(p: PolynomialSymbol) -> Self {
        let degree = p.total_degree().unwrap_or(0);
        SymbolFunction::new(
            move |z| p.eval(z),
            Provenance::ClosedForm,
            SymbolProfile { degree, gaussian: false },
        )
    }

    pub fn eval(&self, z: &[C64]) -> C64 {
        (self.evaluator)(z)
    }
}

impl fmt::Debug for SymbolFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymbolFunction")
            .field("provenance", &self.provenance)
            .field("profile", &self.profile)
            .finish()
    }
}
