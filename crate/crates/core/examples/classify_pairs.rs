//! Counts vertex pairs per case for a few instances.

use std::collections::BTreeMap;

use rainbow_bipartite::construction::{classify_pair, make_scheme};
use rainbow_bipartite::verifier::vertex_pairs;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (k, r) in [(2, 7), (3, 14), (4, 18), (4, 19)] {
        let scheme = make_scheme(k, r)?;
        let mut tally = BTreeMap::new();
        for (a, b) in vertex_pairs(r) {
            let case = classify_pair(&scheme, &scheme.vertex(a)?, &scheme.vertex(b)?)?;
            *tally.entry(case.tag).or_insert(0) += 1;
        }
        let cells: Vec<String> = tally.iter().map(|(t, n)| format!("{t}: {n}")).collect();
        println!("k = {k}, r = {r}: {}", cells.join(", "));
    }
    Ok(())
}
