mod build;
mod cable;
mod murasugi;
mod pd;
mod prime;
mod state;
mod twist;

pub use build::{build_diagram, build_diagram_with_layout, pretzel_state, BandLayout};
pub use cable::{cable, cable_components};
pub use murasugi::{murasugi_sum, MurasugiSum};
pub use pd::{canonical_code, Crossing, LinkDiagram, Sign, SlotPos, Topology};
pub use prime::{is_prime, two_arc_cuts};
pub use state::{
    adequacy, circle_count, resolve, Adequacy, KauffmanState, Smoothing, StateGraphSummary,
};
pub(crate) use state::{smoothing_pairs, UnionFind};
pub use twist::{
    counts, is_alternating, is_reduced, nugatory_crossings, tait_graph, twist_reduced_warnings,
    twist_regions, DiagramCounts, TwistRegion,
};
