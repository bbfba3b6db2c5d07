//! Differential operators with polynomial coefficients,
//! `Σ a_{pq} z^p (∂/∂z)^q`, on the Fock space.

use crate::error::{Error, Result};
use crate::fock::{FockBasis, FockOperator, MultiIndex};
use crate::heisenberg::HeisenbergAlgebraElement;
use crate::linalg::{CMatrix, C64, I};
use crate::symbol::PolynomialSymbol;

/// `A = Σ a_{pq} A_{pq}` with `A_{pq} = z^p (∂/∂z)^q`.
#[derive(Clone, Debug)]
pub struct DiffOperator {
    n: usize,
    lambda: f64,
    terms: Vec<(C64, MultiIndex, MultiIndex)>,
}

impl DiffOperator {
    pub fn new(n: usize, lambda: f64) -> Self {
        DiffOperator {
            n,
            lambda,
            terms: Vec::new(),
        }
    }

    /// The single monomial operator `A_{pq}`.
    pub fn monomial(p: MultiIndex, q: MultiIndex, lambda: f64) -> Result<Self> {
        let mut d = DiffOperator::new(p.len(), lambda);
        d.push(C64::new(1.0, 0.0), p, q)?;
        Ok(d)
    }

    pub fn identity(n: usize, lambda: f64) -> Self {
        let mut d = DiffOperator::new(n, lambda);
        d.terms.push((C64::new(1.0, 0.0), MultiIndex::zero(n), MultiIndex::zero(n)));
        d
    }

    pub fn push(&mut self, a: C64, p: MultiIndex, q: MultiIndex) -> Result<()> {
        for m in [&p, &q] {
            if m.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    actual: m.len(),
                });
            }
        }
        self.terms.push((a, p, q));
        Ok(())
    }

    /// `dπ₀(v,c) = iλc + Σₖ ½i v̄ₖ zₖ + iλ vₖ ∂ₖ`.
    pub fn dpi0(x: &HeisenbergAlgebraElement, lambda: f64) -> Self {
        let n = x.v.len();
        let mut d = DiffOperator::new(n, lambda);
        d.terms.push((I * lambda * x.c, MultiIndex::zero(n), MultiIndex::zero(n)));
        for k in 0..n {
            d.terms.push((0.5 * I * x.v[k].conj(), MultiIndex::unit(n, k), MultiIndex::zero(n)));
            d.terms.push((I * lambda * x.v[k], MultiIndex::zero(n), MultiIndex::unit(n, k)));
        }
        d
    }

    /// `(dτ(A)f)(z) = −df_z(Az) = −Σᵢⱼ aᵢⱼ zⱼ ∂ᵢ f`.
    pub fn dtau(a: &CMatrix, lambda: f64) -> Self {
        let n = a.nrows();
        let mut d = DiffOperator::new(n, lambda);
        for i in 0..n {
            for j in 0..n {
                if a[(i, j)] != C64::new(0.0, 0.0) {
                    d.terms.push((-a[(i, j)], MultiIndex::unit(n, j), MultiIndex::unit(n, i)));
                }
            }
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn terms(&self) -> &[(C64, MultiIndex, MultiIndex)] {
        &self.terms
    }

    pub fn plus(&self, other: &DiffOperator) -> Self {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    /// Largest `|p| + |q|` among the terms.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, p, q)| p.degree() + q.degree()).max().unwrap_or(0)
    }

    /// Truncated matrix on `basis`: `z^p ∂^q w^s = s!/(s−q)! w^{s−q+p}`,
    /// with images above the cutoff dropped.
    pub fn matrix(&self, basis: &FockBasis) -> Result<FockOperator> {
        if basis.n() != self.n || basis.lambda() != self.lambda {
            return Err(Error::BasisMismatch);
        }
        let dim = basis.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for (j, s) in basis.indices().iter().enumerate() {
            for (a, p, q) in &self.terms {
                let Some(rest) = s.checked_sub(q) else { continue };
                let target = rest.add(p);
                let Some(i) = basis.position(&target) else { continue };
                let falling = (s.ln_factorial() - rest.ln_factorial()).exp();
                let ratio = (basis.ln_norm(i) - basis.ln_norm(j)).exp();
                m[(i, j)] += a * falling * ratio;
            }
        }
        FockOperator::new(basis, m)
    }

    /// `k_A(z,w) = Σ a_{pq} (2λ)^{-|q|} z^p w̄^q e^{z w̄/2λ}`.
    pub fn kernel_value(&self, z: &[C64], w: &[C64]) -> C64 {
        let zw: C64 = z.iter().zip(w).map(|(a, b)| a * b.conj()).sum();
        let poly: C64 = self
            .terms
            .iter()
            .map(|(a, p, q)| a * (2.0 * self.lambda).powi(-(q.degree() as i32)) * p.monomial(z) * q.conj_monomial(w))
            .sum();
        poly * (zw / (2.0 * self.lambda)).exp()
    }

    /// Closed-form Weyl symbol, summed over the terms:
    /// `W₀(A_{pq}) = (2λ)^{-|q|} Σ_{k≤p,q} (−λ)^{|k|} p!q!/(k!(p−k)!(q−k)!) z^{p−k} z̄^{q−k}`.
    pub fn weyl_symbol(&self) -> PolynomialSymbol {
        let mut out = PolynomialSymbol::zero();
        for (a, p, q) in &self.terms {
            out = out.plus(&weyl_symbol_diffop(p, q, self.lambda).scaled(*a));
        }
        out
    }

    /// Closed-form Berezin symbol `S₀(A_{pq}) = (2λ)^{-|q|} z^p z̄^q`.
    pub fn berezin_symbol(&self) -> PolynomialSymbol {
        let mut out = PolynomialSymbol::zero();
        for (a, p, q) in &self.terms {
            out = out.plus(&berezin_symbol_diffop(p, q, self.lambda).scaled(*a));
        }
        out
    }
}

/// Weyl symbol of `A_{pq} = z^p (∂/∂z)^q`.
pub fn weyl_symbol_diffop(p: &MultiIndex, q: &MultiIndex, lambda: f64) -> PolynomialSymbol {
    let mut out = PolynomialSymbol::zero();
    let bound = MultiIndex::new(p.entries().iter().zip(q.entries()).map(|(a, b)| *a.min(b)).collect());
    let prefactor = (2.0 * lambda).powi(-(q.degree() as i32));
    let ln_pq = p.ln_factorial() + q.ln_factorial();
    for k in bound.below() {
        let pk = p.checked_sub(&k).unwrap();
        let qk = q.checked_sub(&k).unwrap();
        let comb = (ln_pq - k.ln_factorial() - pk.ln_factorial() - qk.ln_factorial()).exp().round();
        let coeff = prefactor * (-lambda).powi(k.degree() as i32) * comb;
        out.add_term(pk, qk, C64::new(coeff, 0.0));
    }
    out
}

/// Berezin symbol of `A_{pq}`: `(2λ)^{-|q|} z^p z̄^q`.
pub fn berezin_symbol_diffop(p: &MultiIndex, q: &MultiIndex, lambda: f64) -> PolynomialSymbol {
    let mut out = PolynomialSymbol::zero();
    out.add_term(
        p.clone(),
        q.clone(),
        C64::new((2.0 * lambda).powi(-(q.degree() as i32)), 0.0),
    );
    out
}
