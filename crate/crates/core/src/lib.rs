//! Berezin and Weyl symbol calculi on a truncated Bargmann–Fock space, and
//! Stratonovich–Weyl correspondences for generic representations of
//! Heisenberg motion groups `G = H_n ⋊ K`.
//!
//! Everything works at desk scale: the Fock space is truncated at a maximum
//! total monomial degree and all operators are dense complex matrices in the
//! orthonormal monomial basis. Where a truncated identity only holds on an
//! interior block, the relevant operation says so and the diagnostics in
//! [`heisenberg::unitarity_defect`] certify a cutoff before it is trusted.
//!
//! Module map:
//!
//! * [`fock`]: multi-indices, the monomial basis, coherent states.
//! * [`quadrature`]: Gauss–Hermite phase-space grids and sphere grids.
//! * [`heisenberg`]: the Heisenberg group, `π₀`, `dπ₀`, parity, `Φ_λ`.
//! * [`berezin`]: the Berezin symbol `S₀`.
//! * [`symbol`], [`diffop`]: polynomial symbols and polynomial-coefficient
//!   differential operators with their closed-form symbols.
//! * [`weyl`]: the quantizer `Ω₀`, the Weyl symbol `W₀` by trace, by kernel
//!   integral and in closed form, and dequantization.
//! * [`compact`]: irreducible representations of the compact factor `K`
//!   (registered by name) and the polar-factor correspondence `w₁`.
//! * [`motion`]: the motion group, the generic representation `π`, and the
//!   product calculi `S`, `W` together with the moment map `Ψ`.

pub mod berezin;
pub mod compact;
pub mod diffop;
pub mod error;
pub mod fock;
pub mod heisenberg;
pub mod linalg;
pub mod motion;
pub mod poly;
pub mod quadrature;
pub mod symbol;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, C64};
