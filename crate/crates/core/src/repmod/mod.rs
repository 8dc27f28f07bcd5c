//! Modules over bound quiver algebras as quiver representations.

mod decompose;
mod endo;
mod hom;
mod projmap;
mod rep;
mod structure;

pub use decompose::{
    decompose, decompose_seeded, indecomposable_summands, is_isomorphic, is_isomorphic_indecomposable,
    is_isomorphic_seeded, strip_summands, DEFAULT_SEED, RANDOM_TRIALS,
};
pub use endo::{endomorphism_algebra, EndAlgebra};
pub(crate) use hom::check_same;
pub use hom::{hom_coordinates, hom_dim, hom_space};
pub use projmap::{generator_column, lift_through, map_from_projectives, projective_sum, projective_sum_index, ProjMap};
pub use rep::{ModuleMap, Representation};
pub use structure::{
    injective_envelope, injective_sum, is_injective_module, is_projective_module, projective_cover, radical_bases, radical_layers, socle_bases, socle_dims,
    structure, top_dims, top_generators, InjectiveEnvelope, ProjectiveCover, Structure,
};
