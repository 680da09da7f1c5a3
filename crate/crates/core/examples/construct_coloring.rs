//! Builds the 3-coloring of K_{18,18} for k = 4 and prints its layout.
//!
//! ```bash
//! cargo run --example construct_coloring -- 4 18
//! ```

use rainbow_bipartite::construction::{build_coloring, make_scheme};
use rainbow_bipartite::graph::{Side, Vertex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let k = args.next().transpose()?.unwrap_or(4);
    let r = args.next().transpose()?.unwrap_or(18);

    let scheme = make_scheme(k, r)?;
    let coloring = build_coloring(&scheme);
    println!(
        "K_{{{r},{r}}}, k = {k}: {} groups of {} slot(s), {} extra vertex(es) per side",
        scheme.groups(),
        scheme.k1(),
        scheme.r1()
    );
    for (i, n) in coloring.histogram().iter().enumerate() {
        println!("color {}: {n} edges", i + 1);
    }

    // rows are U vertices, columns W vertices, both in flat order
    let l = scheme.labeling();
    print!("{:>7} ", "");
    for w in 0..r {
        print!(
            "{}",
            if w % scheme.k1().max(1) == 0 {
                '|'
            } else {
                ' '
            }
        );
    }
    println!();
    for u in 0..r {
        let label = l.vertex_at(Vertex {
            side: Side::U,
            flat: u,
        })?;
        let row: String = (0..r)
            .map(|w| char::from(b'0' + coloring.color(u, w)))
            .collect();
        println!("{label:>7} {row}");
    }
    Ok(())
}
