//! Exact rational linear algebra.

pub mod echelon;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use echelon::{Echelon, SparseRow};
pub use matrix::{combination, dot, is_zero_vector, unit_vector, vec_add, vec_scale, vec_sub, zero_vector, Matrix, Vector};
pub use scalar::Scalar;
pub use subspace::{gram_complement, gram_orthogonal, Subspace};
