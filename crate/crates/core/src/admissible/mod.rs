//! Admissible levels, admissible weights and nilpotent orbit combinatorics.

pub mod affine_weyl;
pub mod level;
pub mod omega;
pub mod orbits;

pub use affine_weyl::{t_translation, w_j, y_is_admissible, AffineWeight, AffineWeylElement};
pub use level::{admissible_check, pr_k_integral, AdmissibleLevel};
pub use omega::{
    all_sigmas, certificates, omega_direct, omega_json, omega_theorem, pr_k_bar, pr_k_bar_classes,
    PrEntry,
};
pub use orbits::{all_partitions, orbit_q, orbit_table, richardson, OrbitRow, Partition};
