mod classify;
mod graph;
mod paths;
mod transform;
mod tutte;

pub use classify::{near_alternating_check, ClassificationReport};
pub use graph::{validate, Edge, HalfEdge, ValidationReport, Vertex, WeightedPlanarGraph};
pub use paths::{
    multi_twist_profile, path_length, path_profile, ratio_exceeds, GraphPath, LengthMode,
    MultiTwistProfile, NegativeEdgeProfile, PathProfile, DEFAULT_PATH_CAP,
};
pub use transform::{add_full_twists, contract_edge, delete_edge, transform, GraphOp};
pub use tutte::{tutte_polynomial, SimpleMultigraph, TUTTE_MAX_EDGES};
