//! Quivers, path algebras modulo admissible ideals, and presentations of
//! abstract algebras.

mod algebra;
mod findim;
pub mod groebner;
mod presentation;
mod quiver;

pub use algebra::{algebra_from_strings, parse_relation, Algebra, BoundQuiverAlgebra, DEFAULT_PATH_CAP};
pub use findim::FinDimAlgebra;
pub use presentation::{quiver_presentation, Presentation};
pub use quiver::{Arrow, Path, PathElement, Quiver};
