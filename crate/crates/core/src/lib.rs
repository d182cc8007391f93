pub mod error;
pub mod exact;
pub mod jordan;
pub mod octonion;
pub mod orbits;
pub mod polarity;
pub mod repcheck;
pub mod rootsys;
pub mod samplers;
pub mod suites;
pub mod symmetry;

pub use error::{Error, Result};
