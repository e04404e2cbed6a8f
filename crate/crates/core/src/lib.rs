//! Exact computations with finite-dimensional Hopf algebras: structure checks,
//! graded and comodule crossed products, cleft extensions, low-degree Hopf
//! cohomology, and the decomposition of commutative Hopf superalgebras.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cohomology;
pub mod comodule;
pub mod corpus;
pub mod error;
pub mod field;
pub mod graded;
pub mod group;
pub mod linalg;
pub mod search;
pub mod superalg;

pub use error::{Error, Result};
pub use field::{Scalar, ScalarField};
