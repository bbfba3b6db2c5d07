//! Berezin symbols `S₀(A)(z) = ⟨A e_z, e_z⟩ / ⟨e_z, e_z⟩`.

use crate::error::{Error, Result};
use crate::fock::{coherent_state, coherent_tail, inner_product, FockOperator};
use crate::heisenberg::{phi_lambda, HeisenbergAlgebraElement};
use crate::linalg::{C64, I};

#[derive(Clone, Copy, Debug)]
pub struct BerezinOptions {
    /// Largest relative coherent-state mass allowed outside the cutoff.
    pub tail_tolerance: f64,
}

impl Default for BerezinOptions {
    fn default() -> Self {
        BerezinOptions { tail_tolerance: 1e-10 }
    }
}

/// A symbol value together with the truncation tail it was computed under.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymbolValue {
    pub value: C64,
    pub tail: f64,
}

/// `⟨A ẽ_z, ẽ_z⟩ / ⟨ẽ_z, ẽ_z⟩` with `ẽ_z` the truncated coherent state.
pub fn berezin_symbol(a: &FockOperator, z: &[C64], opts: BerezinOptions) -> Result<SymbolValue> {
    let tail = coherent_tail(z, a.basis());
    if tail > opts.tail_tolerance {
        return Err(Error::TailTooLarge {
            tail,
            tolerance: opts.tail_tolerance,
        });
    }
    let e = coherent_state(z, a.basis())?;
    let ae = a.apply(&e)?;
    let value = inner_product(&ae, &e)? / inner_product(&e, &e)?;
    Ok(SymbolValue { value, tail })
}

/// `S₀(dπ₀(X))(z) = i⟨Φ_λ(z), X⟩`, evaluated without matrices.
pub fn berezin_symbol_dpi0(x: &HeisenbergAlgebraElement, z: &[C64], lambda: f64) -> Result<C64> {
    Ok(I * phi_lambda(z, lambda).pair(x)?)
}
