//! Exact scalar arithmetic, dense matrices over a field, and integer
//! lattice arithmetic.

mod scalar;
mod matrix;
mod intmat;
mod lattice;

pub use scalar::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use intmat::{Hnf, IntMatrix, Snf};
pub use lattice::IntLattice;
