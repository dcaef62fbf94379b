//! k-edge and k-vertex strongly connected components of directed graphs.
//!
//! The main entry point is [`kscc`], a recursive decomposition that looks for
//! (almost) top or bottom SCCs in sparse level subgraphs before falling back
//! to a search on the whole graph. [`two_escc_sparse`] is a separate
//! local-search algorithm for 2-edge components, and [`oracle`] holds the
//! slow reference implementations used to cross-check both.
//!
//! ```
//! use kscc::{fixtures, kscc, Mode};
//!
//! let comps = kscc(&fixtures::bowtie(), 2, Mode::Vertex).unwrap();
//! assert_eq!(comps.vertex_sets(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
//! ```

pub mod bench;
pub mod components;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod hierarchical;
pub mod io;
pub mod level;
pub mod local;
pub mod oracle;
pub mod primitives;
pub mod trace;
pub mod transform;

pub use components::{Component, ComponentSet, Mode};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Subgraph, VertexId};
pub use hierarchical::{kscc, kscc_with, BaseCase, KsccConfig, KsccRun};
pub use local::{two_escc_sparse, SparseConfig};
