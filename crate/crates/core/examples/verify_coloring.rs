//! Verifies constructed colorings near the threshold and shows what a failure
//! looks like.

use rainbow_bipartite::construction::{build_coloring, g_threshold, make_scheme};
use rainbow_bipartite::verifier::verify_k_connectivity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 2..=4 {
        let g = g_threshold(k)?;
        for r in [g, g + 1, g + 2] {
            let scheme = make_scheme(k, r)?;
            let coloring = build_coloring(&scheme);
            let report = verify_k_connectivity(&coloring, k, false)?;
            print!(
                "k = {k}, r = {r:>2}: {} pairs, min packing {}",
                report.per_pair.len(),
                report.min_packing
            );
            if report.ok {
                println!(", ok");
                continue;
            }
            println!(", FAILED at");
            for p in report.worst_pairs() {
                let l = scheme.labeling();
                println!("    {} {}", l.vertex_at(p.u)?, l.vertex_at(p.v)?);
            }
        }
    }
    Ok(())
}
