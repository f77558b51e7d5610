//! Relaxed Verma modules as explicit PBW modules, their characters and
//! comparisons with relaxed Wakimoto modules.

pub mod characters;
pub mod pbw;
pub mod singular;

pub use characters::{
    character_relaxed_verma, character_relaxed_wakimoto, twisted_prediction, verma_top_character,
};
pub use pbw::{relaxed_verma_act, PBWVector, PbwMonomial, RelaxedVerma};
pub use singular::{
    coinvariants_character, find_singular_vectors, top_component_check, SingularVector,
};
