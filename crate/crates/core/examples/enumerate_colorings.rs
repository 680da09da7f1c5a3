//! Walks all colorings of K_{3,3} with at most three colors, one per renaming
//! class, and tallies them by color count and by rainbow connectivity.

use rainbow_bipartite::oracle::{canonical_count, enumerate_canonical, stirling2};
use rainbow_bipartite::verifier::passes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (r, cap) = (3, 3);
    let mut by_colors = [[0u32; 4]; 4];
    for coloring in enumerate_canonical(r, cap, false)? {
        let best = (1..=r)
            .take_while(|&k| passes(&coloring, k).unwrap())
            .count();
        by_colors[coloring.colors()][best] += 1;
    }
    println!("colors  S(9,b)  rainbow k-connected for k = 0 1 2 3");
    for (b, row) in by_colors.iter().enumerate().skip(1) {
        println!(
            "{b:>6} {:>7}  {:>29}",
            stirling2(r * r, b),
            format!("{} {} {} {}", row[0], row[1], row[2], row[3])
        );
    }
    println!("total  {}", canonical_count(r * r, cap));
    Ok(())
}
