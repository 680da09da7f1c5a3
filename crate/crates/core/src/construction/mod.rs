//! The 3-edge-coloring of `K_{r,r}` for `r >= g(k)` and its explicit witness paths.

mod cases;
mod scheme;
mod witness;

pub use cases::{classify_pair, CaseLabel, CaseTag, Symmetry};
pub use scheme::{build_coloring, g_threshold, make_scheme, AbstractVertex, PartitionScheme, Slot};
pub use witness::{witness_paths, WitnessGenerator, Witnesses};
