//! Lie algebras of derivations acting on the Jordan algebra.

pub mod aut;
pub mod cache;
pub mod derivation;
pub mod named;
pub mod subalgebra;

pub use aut::AutElement;
pub use derivation::{der_jordan, der_jordan_uncached, der_octonion, is_derivation, is_octonion_derivation, lift_octonion_derivation};
pub use subalgebra::Subalgebra;
