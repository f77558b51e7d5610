//! Exact free-field realizations of affine `sl_n`.
//!
//! The crate builds the finite Weyl-algebra homomorphism `π_g`, its
//! mode-level lift to the affine algebra acting on relaxed Wakimoto
//! modules, relaxed Verma modules as explicit PBW modules, and the
//! combinatorics of admissible weights and nilpotent orbits. All
//! arithmetic is over `ℚ`.
//!
//! ```
//! use wakimoto::{lie::Lie, weyl_poly::pi_g};
//!
//! let sl2 = Lie::new(2).unwrap();
//! let e = sl2.e(0);
//! assert_eq!(pi_g(&sl2, &e).render(&sl2), "x_{a1}^2 d_{a1} + x_{a1} h1");
//! ```

// Matrix code indexes rows and columns together.
#![allow(clippy::needless_range_loop)]

pub mod admissible;
pub mod affine;
pub mod character;
pub mod cli;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod relaxed;
pub mod root_data;
pub mod weyl_poly;

pub use error::{Error, Result};
pub use rational::Q;
