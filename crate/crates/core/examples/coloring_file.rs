//! Round trip through the coloring file format and a verification report.

use rainbow_bipartite::construction::{build_coloring, make_scheme};
use rainbow_bipartite::format::{ColoringFile, ReportFile};
use rainbow_bipartite::verifier::verify_k_connectivity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scheme = make_scheme(2, 4)?;
    let file = ColoringFile::from_scheme(&scheme, build_coloring(&scheme));
    let text = file.to_json();
    print!("{text}");

    let back = ColoringFile::parse(&text)?;
    assert_eq!(back.coloring, file.coloring);

    let report = verify_k_connectivity(&back.coloring, 2, true)?;
    let mut rendered = ReportFile::new(&report, &back.labels, false);
    // keep the printout short
    if let Some(w) = rendered.witnesses.as_mut() {
        w.truncate(2);
    }
    print!("{}", rendered.to_json());
    Ok(())
}
