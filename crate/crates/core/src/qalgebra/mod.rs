//! Exact Laurent polynomial arithmetic and closed-form skein quantities.

mod bilaurent;
mod laurent;
mod partition;
mod skein;

pub use bilaurent::BiLaurentPoly;
pub use laurent::{LaurentPoly, Var};
pub use partition::{minimal_partition, IntPartition};
pub use skein::{
    chebyshev_coeffs, delta, delta_factorial, is_admissible, loop_value, quantum_int, theta,
    theta_fraction,
};
