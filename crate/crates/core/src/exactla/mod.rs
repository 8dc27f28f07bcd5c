//! Exact dense linear algebra.

mod matrix;
pub mod poly;

pub use matrix::{quotient_data, Matrix, QuotientData, Rref, RowSpace};
