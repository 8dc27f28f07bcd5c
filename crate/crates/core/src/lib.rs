pub mod acceptance;
pub mod checks;
pub mod derived;
pub mod error;
pub mod exactla;
pub mod families;
pub mod field;
pub mod homolog;
pub mod preproj;
pub mod quivalg;
pub mod repmod;

pub use error::{Error, Result};
