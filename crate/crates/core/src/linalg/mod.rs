//! Exact linear algebra over [`ScalarField`](crate::field::ScalarField).

mod matrix;
mod sparse;
mod subspace;

pub use matrix::{Echelon, Matrix, Solution};
pub use sparse::{LinearMap, SVec};
pub use subspace::{Quotient, Subspace};
