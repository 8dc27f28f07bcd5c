//! Bounded complexes, derived Hom, Nakayama and Serre functors, the
//! subcategory `U` and Hom spaces of the cluster category.

mod amiot;
mod complex;
mod functors;
mod projcomplex;

pub use amiot::{amiot_hom, u_window, GradedHom, UCache, WindowObject, DEFAULT_WINDOW_CAP};
pub use complex::ComplexOfModules;
pub use functors::{
    hom_d, hom_from_projective, inj_resolve_complex_dual, nakayama, nakayama_inv, nakayama_proj, proj_resolve_complex,
    proj_resolve_complex_with_map, serre_n_inv_step, serre_n_power, serre_n_power_proj, serre_n_step, ProjectiveReplacement,
};
pub use projcomplex::ProjComplex;
