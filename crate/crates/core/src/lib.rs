//! Enumeration of k-vertex connected components (k-VCCs).
//!
//! A k-VCC is a maximal induced subgraph with more than `k` vertices that
//! stays connected after removing any `k - 1` of them. [`kvcc_enum`] finds
//! them all by repeatedly searching for small vertex cuts and splitting the
//! graph along them, with the cut copied into both sides.
//!
//! ```
//! use kvcc::{kvcc_enum, parse_edge_list, Variant};
//!
//! // Two K4s sharing vertices 2 and 3.
//! let g = parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n").unwrap();
//! let result = kvcc_enum(&g, 3, Variant::Star).unwrap();
//! assert_eq!(result.components, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5]]);
//! ```

pub mod certificate;
pub mod cut;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod metrics;
pub mod oracle;

pub use cut::{global_cut, global_cut_basic, global_cut_star, Counters, Variant};
pub use enumerate::{
    kvcc_enum, kvcc_enum_with, overlap_partition, parse_components, stats_fields, write_components,
    write_stats, EnumerateOptions, VccResult,
};
pub use error::{Error, Result};
pub use graph::{load_edge_list, parse_edge_list, write_edge_list, Graph, VertexSet};
