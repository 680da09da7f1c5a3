//! Rainbow `k`-connectivity of the complete bipartite graph `K_{r,r}`.
//!
//! The crate builds a 3-edge-coloring of `K_{r,r}` that is rainbow
//! `k`-connected once `r >= 2k * ceil(k/2)`, produces explicit witness path
//! families for every vertex pair, checks arbitrary colorings exactly, and
//! computes `rc_k` of tiny instances by exhaustive search.
//!
//! ```
//! use rainbow_bipartite::{build_coloring, make_scheme, verify_k_connectivity};
//!
//! let scheme = make_scheme(3, 12).unwrap();
//! let coloring = build_coloring(&scheme);
//! assert_eq!(coloring.colors_used(), 3);
//! assert!(verify_k_connectivity(&coloring, 3, false).unwrap().ok);
//! ```

pub mod cli;
pub mod construction;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod verifier;

pub use construction::{
    build_coloring, classify_pair, g_threshold, make_scheme, witness_paths, CaseLabel, CaseTag,
    PartitionScheme, WitnessGenerator, Witnesses,
};
pub use error::{Error, Result};
pub use graph::{Color, EdgeColoring, Label, Labeling, RainbowPath, Side, Vertex, VertexRef};
pub use oracle::{count_valid_colorings, enumerate_canonical, rc_k_bruteforce, SearchOptions};
pub use verifier::{check_witness_set, passes, verify_k_connectivity, VerificationReport};
