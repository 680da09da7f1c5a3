//! Prints one representative pair of every case with its witness paths.

use rainbow_bipartite::construction::{make_scheme, CaseTag, WitnessGenerator};
use rainbow_bipartite::graph::Vertex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (k, r) = (4, 19);
    let scheme = make_scheme(k, r)?;
    let gen = WitnessGenerator::new(scheme);
    let l = scheme.labeling();

    let mut shown = Vec::new();
    for a in 0..2 * r {
        for b in a + 1..2 * r {
            let u = scheme.vertex(Vertex::from_id(a, r))?;
            let v = scheme.vertex(Vertex::from_id(b, r))?;
            let w = gen.witnesses(&u, &v)?;
            if shown.contains(&w.case.tag) {
                continue;
            }
            shown.push(w.case.tag);
            println!("{u} .. {v}: case {}", w.case);
            for p in &w.paths {
                println!("    {}", p.display_with(l));
            }
        }
    }
    assert_eq!(shown.len(), CaseTag::ALL.len());
    Ok(())
}
