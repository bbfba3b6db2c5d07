//! The Heisenberg motion group `G = H_n ⋊ K`, its generic representation
//! `π = π₀τ ⊗ ρ`, and the product calculi on `ℂⁿ × o(φ₀)`.

mod group;
mod rep;
mod symbols;

pub use group::{adjoint, coadjoint, MotionAlgebraElement, MotionDual, MotionElement};
pub use rep::{dpi_matrix, dtau_matrix, pi_matrix, tau_matrix, ProductOperator};
pub use symbols::{tensor, MotionGroup};
