//! Connectivity building blocks: SCCs, dominators, bounded flows, separators.

pub mod bridges;
pub mod dominators;
pub mod flow;
pub mod scc;
pub mod separators;

pub use bridges::{strong_articulation_points, strong_bridges};
pub use dominators::{dominator_vertices, edge_dominator, DominatorTree};
pub use flow::{bounded_min_separator, disjoint_paths};
pub use scc::{is_strongly_connected, scc, top_scc, top_scc_excluding, SccPartition};
pub use separators::{k_dominator, k_separator, Separator, SeparatorRole};
