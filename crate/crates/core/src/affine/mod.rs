//! Mode-level free fields and the affine homomorphism `π_{κ,g}`.

pub mod field;
pub mod modes;
pub mod realization;
pub mod verify;

pub use field::{Factor, FieldExpr, FieldTerm};
pub use modes::{heisenberg_act, FieldKind, ModeContext, Mono, Var, WakimotoVector};
pub use realization::{bracket_closure, pi_affine, solve_c_gamma, ModeCache, Realization};
pub use verify::{verify_affine_comm, zhu_check, CommReport, CommSlice, ZhuReport};
