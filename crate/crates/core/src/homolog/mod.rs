//! Resolutions, Ext, and Auslander–Reiten translates.

mod resolution;
mod translate;

pub use resolution::{
    ext, ext_from_resolution, global_dimension, injective_dimension, lift_chain_map, min_proj_resolution, projective_dimension,
    syzygy, ProjResolution, DEFAULT_RESOLUTION_CAP,
};
pub(crate) use resolution::hom_differential;
pub use translate::{strip_injectives, strip_projectives, tau, tau_inv, tau_n, tau_n_inv, transpose};
