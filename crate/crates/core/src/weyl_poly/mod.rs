//! The finite Weyl algebra, `π_g`, its Fock modules and the twisting functor on characters.

pub mod algebra;
pub mod fock;
pub mod pi;
pub mod series;
pub mod twist;

pub use algebra::WeylElement;
pub use fock::{act_f, FockKind, FockVector};
pub use pi::{pi_g, pi_g_basis, pq_polynomials, t_poly, verify_pi_hom};
pub use series::{bernoulli_series, Kernel};
pub use twist::{fock_character, gamma_alpha_multiplicity, twist_character, GammaReport};

/// `ℂ[n̄] ⊗ g`.
pub type PolyGValued = crate::lie::PolyLie;
