//! Exact rc_k of K_{2,2} and K_{3,3} by exhaustive search.

use std::time::Instant;

use rainbow_bipartite::oracle::{count_valid_colorings, rc_k_bruteforce, SearchOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SearchOptions::default();
    for r in 2..=3 {
        for k in 1..=r {
            let start = Instant::now();
            let rc = rc_k_bruteforce(r, k, 6, opts)?;
            let valid = count_valid_colorings(r, k, rc, opts)?;
            println!(
                "rc_{k}(K_{{{r},{r}}}) = {rc}   ({valid} canonical coloring(s) attain it, {:.1?})",
                start.elapsed()
            );
        }
    }
    Ok(())
}
