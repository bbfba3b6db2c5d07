//! Holomorphic polynomials in `n` variables with complex coefficients.

use std::collections::BTreeMap;

use crate::fock::MultiIndex;
use crate::linalg::C64;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, C64>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.terms.insert(MultiIndex::zero(n), C64::new(1.0, 0.0));
        p
    }

    /// `Σᵢ coeffs[i] zᵢ`.
    pub fn linear(coeffs: &[C64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != C64::new(0.0, 0.0) {
                p.terms.insert(MultiIndex::unit(n, i), c);
            }
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &MultiIndex) -> C64 {
        self.terms.get(p).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *out.terms.entry(a.add(b)).or_insert(C64::new(0.0, 0.0)) += ca * cb;
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, z: &[C64]) -> C64 {
        self.terms.iter().map(|(p, c)| c * p.monomial(z)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn binomial_expansion() {
        let l = Polynomial::linear(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let p = l.pow(3);
        // (z₁ + i z₂)³: coefficient of z₁ z₂² is 3·i² = −3
        assert_eq!(p.coeff(&MultiIndex::new(vec![1, 2])), c(-3.0, 0.0));
        let z = [c(0.3, 0.1), c(-0.2, 0.5)];
        let direct = (z[0] + c(0.0, 1.0) * z[1]).powu(3);
        assert!((p.eval(&z) - direct).norm() < 1e-15);
    }
}
