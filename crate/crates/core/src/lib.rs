//! Exact quantum invariants of links built from weighted planar graphs, and checks of the
//! degree, slope, coefficient and volume formulas predicted for them.

pub mod bracket;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod graphmodel;
pub mod qalgebra;
pub mod slope;

pub use error::{Error, Result};
