//! Writes a Graphviz file of the constructed coloring.
//!
//! ```bash
//! cargo run --example dot_export -- 2 5 > k2r5.dot && dot -Tsvg k2r5.dot > k2r5.svg
//! ```

use rainbow_bipartite::construction::{build_coloring, make_scheme};
use rainbow_bipartite::format::{to_dot, Labels};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let k = args.next().transpose()?.unwrap_or(2);
    let r = args.next().transpose()?.unwrap_or(5);
    let scheme = make_scheme(k, r)?;
    print!(
        "{}",
        to_dot(
            &build_coloring(&scheme),
            &Labels::for_scheme(scheme.labeling())
        )?
    );
    Ok(())
}
