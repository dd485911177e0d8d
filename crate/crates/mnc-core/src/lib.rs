//! Numerical workbench for measures of noncompactness on truncated standard
//! Hilbert C*-modules over finite-dimensional C*-algebras.

mod error;
pub use error::{Error, Result};
