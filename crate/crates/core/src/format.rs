//! On-disk formats: the coloring file, the verification report and DOT export.
//!
//! A coloring file is a JSON document with a fixed key order, written with one
//! edge per line so that two files diff line by line:
//!
//! ```text
//! {
//!   "header": {"format_version":"1","kind":"complete_bipartite","r":4,"colors":3,"k_hint":2,"scheme":{"k":2,"k1":1,"r1":0}},
//!   "labels": {
//!     "U": ["U:1:1","U:2:1","U:3:1","U:4:1"],
//!     "W": ["W:1:1","W:2:1","W:3:1","W:4:1"]
//!   },
//!   "edges": [
//!     {"u":0,"w":0,"c":1},
//!     ...
//!   ]
//! }
//! ```
//!
//! Flat indices are 0-based. Without a scheme the labels are `U:<i>` and
//! `W:<i>` with `i` counting from 1.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::construction::{make_scheme, PartitionScheme};
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Labeling, RainbowPath, Side, Vertex};
use crate::verifier::VerificationReport;

pub const FORMAT_VERSION: &str = "1";
pub const KIND: &str = "complete_bipartite";

/// Render palette of DOT exports, keyed by color.
pub const PALETTE: [(Color, &str); 3] = [(1, "#e41a1c"), (2, "#377eb8"), (3, "#4daf4a")];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeHeader {
    pub k: usize,
    pub k1: usize,
    pub r1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub format_version: String,
    pub kind: String,
    pub r: usize,
    pub colors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_hint: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeHeader>,
}

/// Per-side label of every flat index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Labels {
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
}

impl Labels {
    pub fn for_scheme(labeling: &Labeling) -> Self {
        let side = |s: Side| {
            (0..labeling.r())
                .map(|flat| {
                    labeling
                        .vertex_at(Vertex { side: s, flat })
                        .expect("flat index in range")
                        .to_string()
                })
                .collect()
        };
        Labels {
            u: side(Side::U),
            w: side(Side::W),
        }
    }

    pub fn plain(r: usize) -> Self {
        Labels {
            u: (1..=r).map(|i| format!("U:{i}")).collect(),
            w: (1..=r).map(|i| format!("W:{i}")).collect(),
        }
    }

    pub fn of(&self, v: Vertex) -> &str {
        match v.side {
            Side::U => &self.u[v.flat],
            Side::W => &self.w[v.flat],
        }
    }

    /// Vertex carrying `label`, if any.
    pub fn find(&self, label: &str) -> Option<Vertex> {
        let pos = |side: &[String]| side.iter().position(|l| l == label);
        pos(&self.u)
            .map(Vertex::u)
            .or_else(|| pos(&self.w).map(Vertex::w))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: usize,
    pub w: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColoringFile {
    header: Header,
    labels: Labels,
    edges: Vec<EdgeRecord>,
}

/// A validated coloring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub header: Header,
    pub labels: Labels,
    pub coloring: EdgeColoring,
}

impl ColoringFile {
    pub fn from_coloring(coloring: EdgeColoring, k_hint: Option<usize>) -> Self {
        ColoringFile {
            header: Header {
                format_version: FORMAT_VERSION.into(),
                kind: KIND.into(),
                r: coloring.r(),
                colors: coloring.colors(),
                k_hint,
                scheme: None,
            },
            labels: Labels::plain(coloring.r()),
            coloring,
        }
    }

    pub fn from_scheme(scheme: &PartitionScheme, coloring: EdgeColoring) -> Self {
        let mut file = Self::from_coloring(coloring, Some(scheme.k()));
        file.header.scheme = Some(SchemeHeader {
            k: scheme.k(),
            k1: scheme.k1(),
            r1: scheme.r1(),
        });
        file.labels = Labels::for_scheme(scheme.labeling());
        file
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"header\": {},", compact(&self.header));
        out.push_str("  \"labels\": {\n");
        let _ = writeln!(out, "    \"U\": {},", compact(&self.labels.u));
        let _ = writeln!(out, "    \"W\": {}", compact(&self.labels.w));
        out.push_str("  },\n  \"edges\": [\n");
        let r = self.coloring.r();
        for u in 0..r {
            for w in 0..r {
                let c = self.coloring.color(u, w);
                let last = u + 1 == r && w + 1 == r;
                let _ = writeln!(
                    out,
                    "    {{\"u\":{u},\"w\":{w},\"c\":{c}}}{}",
                    if last { "" } else { "," }
                );
            }
        }
        out.push_str("  ]\n}\n");
        out
    }

    /// Parses and validates a coloring file, naming the first offending record.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawColoringFile = serde_json::from_str(text)?;
        let h = &raw.header;
        if h.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "header.format_version: expected \"{FORMAT_VERSION}\", found \"{}\"",
                h.format_version
            )));
        }
        if h.kind != KIND {
            return Err(Error::Format(format!(
                "header.kind: expected \"{KIND}\", found \"{}\"",
                h.kind
            )));
        }
        if h.r == 0 {
            return Err(Error::Format("header.r: must be positive".into()));
        }
        if h.colors == 0 || h.colors > usize::from(Color::MAX) {
            return Err(Error::Format(format!(
                "header.colors: {} outside 1..={}",
                h.colors,
                Color::MAX
            )));
        }
        let r = h.r;
        let expected = match h.scheme {
            Some(s) => {
                let labeling = Labeling::new(s.k, s.k1, s.r1)
                    .map_err(|e| Error::Format(format!("header.scheme: {e}")))?;
                if labeling.r() != r {
                    return Err(Error::Format(format!(
                        "header.scheme: describes r = {}, header.r is {r}",
                        labeling.r()
                    )));
                }
                Labels::for_scheme(&labeling)
            }
            None => Labels::plain(r),
        };
        for (name, got, want) in [
            ("U", &raw.labels.u, &expected.u),
            ("W", &raw.labels.w, &expected.w),
        ] {
            if got.len() != r {
                return Err(Error::Format(format!(
                    "labels.{name}: {} entries, expected {r}",
                    got.len()
                )));
            }
            if let Some(i) = (0..r).find(|&i| got[i] != want[i]) {
                return Err(Error::Format(format!(
                    "labels.{name}[{i}]: \"{}\", expected \"{}\"",
                    got[i], want[i]
                )));
            }
        }
        let mut assignment: Vec<Color> = vec![0; r * r];
        for (i, e) in raw.edges.iter().enumerate() {
            if e.u >= r || e.w >= r {
                return Err(Error::Format(format!(
                    "edges[{i}]: ({}, {}) outside 0..{r}",
                    e.u, e.w
                )));
            }
            if e.c == 0 || e.c > h.colors {
                return Err(Error::Format(format!(
                    "edges[{i}]: color {} outside 1..={}",
                    e.c, h.colors
                )));
            }
            let slot = &mut assignment[e.u * r + e.w];
            if *slot != 0 {
                return Err(Error::Format(format!(
                    "edges[{i}]: duplicate edge ({}, {})",
                    e.u, e.w
                )));
            }
            *slot = e.c as Color;
        }
        if let Some(missing) = assignment.iter().position(|&c| c == 0) {
            return Err(Error::Format(format!(
                "edges: {} entries, expected {}; first missing edge ({}, {})",
                raw.edges.len(),
                r * r,
                missing / r,
                missing % r
            )));
        }
        let coloring = EdgeColoring::new(r, h.colors, assignment)?;
        Ok(ColoringFile {
            header: raw.header,
            labels: raw.labels,
            coloring,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// The partition scheme named in the header, if any.
    pub fn scheme(&self) -> Option<PartitionScheme> {
        let s = self.header.scheme?;
        make_scheme(s.k, s.k1 * 2 * s.k + s.r1).ok()
    }
}

fn compact<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub u: String,
    pub v: String,
    pub packing: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub vertices: Vec<String>,
    pub colors: Vec<Color>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub u: String,
    pub v: String,
    pub paths: Vec<PathRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub k: usize,
    pub ok: bool,
    pub min_packing: usize,
    pub worst_pairs: Vec<PairRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_pair: Option<Vec<PairRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRecord>>,
}

impl PathRecord {
    pub fn new(path: &RainbowPath, labels: &Labels) -> Self {
        PathRecord {
            vertices: path
                .vertices()
                .iter()
                .map(|&x| labels.of(x).to_owned())
                .collect(),
            colors: path.colors().to_vec(),
        }
    }
}

impl ReportFile {
    /// Pairs keep the report's order, which is sorted by global vertex index.
    pub fn new(report: &VerificationReport, labels: &Labels, per_pair: bool) -> Self {
        let record = |p: &crate::verifier::PairPacking| PairRecord {
            u: labels.of(p.u).to_owned(),
            v: labels.of(p.v).to_owned(),
            packing: p.packing,
        };
        ReportFile {
            k: report.k,
            ok: report.ok,
            min_packing: report.min_packing,
            worst_pairs: report.worst_pairs().map(record).collect(),
            per_pair: per_pair.then(|| report.per_pair.iter().map(record).collect()),
            witnesses: report.witnesses.as_ref().map(|all| {
                report
                    .per_pair
                    .iter()
                    .zip(all)
                    .map(|(p, paths)| WitnessRecord {
                        u: labels.of(p.u).to_owned(),
                        v: labels.of(p.v).to_owned(),
                        paths: paths.iter().map(|x| PathRecord::new(x, labels)).collect(),
                    })
                    .collect()
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Graphviz rendering with `U` on one rank above `W`, vertices in flat order
/// (group by group), each edge carrying `color=<c>` from a three-color scheme.
pub fn to_dot(coloring: &EdgeColoring, labels: &Labels) -> Result<String> {
    if coloring.colors() > PALETTE.len() {
        return Err(Error::Parameter(format!(
            "DOT export renders at most {} colors, coloring has {}",
            PALETTE.len(),
            coloring.colors()
        )));
    }
    let r = coloring.r();
    let mut out = String::new();
    let palette: Vec<String> = PALETTE
        .iter()
        .map(|(c, hex)| format!("{c}={hex}"))
        .collect();
    let _ = writeln!(out, "// palette: {}", palette.join(" "));
    let _ = writeln!(out, "graph K_{r}_{r} {{");
    out.push_str(
        "  rankdir=TB;\n  node [shape=circle, fontsize=9];\n  edge [colorscheme=set13];\n",
    );
    for (side, names) in [("U", &labels.u), ("W", &labels.w)] {
        let _ = write!(out, "  subgraph side_{side} {{ rank=same;");
        for name in names {
            let _ = write!(out, " \"{name}\";");
        }
        out.push_str(" }\n");
    }
    // keep the left-to-right order inside each rank
    for names in [&labels.u, &labels.w] {
        if names.len() > 1 {
            let chain: Vec<String> = names.iter().map(|n| format!("\"{n}\"")).collect();
            let _ = writeln!(out, "  {} [style=invis];", chain.join(" -- "));
        }
    }
    for u in 0..r {
        for w in 0..r {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [color={}];",
                labels.u[u],
                labels.w[w],
                coloring.color(u, w)
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build_coloring;

    fn constructed(k: usize, r: usize) -> ColoringFile {
        let s = make_scheme(k, r).unwrap();
        let c = build_coloring(&s);
        ColoringFile::from_scheme(&s, c)
    }

    #[test]
    fn small_file_layout() {
        let text = constructed(2, 4).to_json();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("{"));
        assert_eq!(
            lines.next(),
            Some(
                r#"  "header": {"format_version":"1","kind":"complete_bipartite","r":4,"colors":3,"k_hint":2,"scheme":{"k":2,"k1":1,"r1":0}},"#
            )
        );
        assert!(text.contains(r#"    "U": ["U:1:1","U:2:1","U:3:1","U:4:1"],"#));
        assert!(text.contains("    {\"u\":0,\"w\":1,\"c\":3},\n"));
        assert!(text.ends_with("    {\"u\":3,\"w\":3,\"c\":1}\n  ]\n}\n"));
    }

    #[test]
    fn round_trip() {
        for (k, r) in [(2, 5), (3, 12), (4, 18)] {
            let file = constructed(k, r);
            let back = ColoringFile::parse(&file.to_json()).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.scheme().unwrap().r(), r);
        }
        let plain =
            ColoringFile::from_coloring(EdgeColoring::new(2, 4, vec![1, 2, 3, 4]).unwrap(), None);
        assert_eq!(ColoringFile::parse(&plain.to_json()).unwrap(), plain);
        assert_eq!(plain.labels.u, vec!["U:1", "U:2"]);
    }

    fn mutate(from: &str, to: &str) -> Error {
        let text = constructed(2, 4).to_json().replacen(from, to, 1);
        ColoringFile::parse(&text).unwrap_err()
    }

    fn message(e: Error) -> String {
        match e {
            Error::Format(m) => m,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn first_offending_record_is_named() {
        assert_eq!(
            message(mutate(r#"{"u":0,"w":1,"c":3}"#, r#"{"u":0,"w":1,"c":4}"#)),
            "edges[1]: color 4 outside 1..=3"
        );
        assert_eq!(
            message(mutate(r#"{"u":0,"w":1,"c":3}"#, r#"{"u":0,"w":0,"c":3}"#)),
            "edges[1]: duplicate edge (0, 0)"
        );
        assert_eq!(
            message(mutate(r#"{"u":0,"w":1,"c":3}"#, r#"{"u":0,"w":9,"c":3}"#)),
            "edges[1]: (0, 9) outside 0..4"
        );
        assert_eq!(
            message(mutate("\"U:2:1\"", "\"U:2:2\"")),
            "labels.U[1]: \"U:2:2\", expected \"U:2:1\""
        );
        assert_eq!(
            message(mutate(r#""format_version":"1""#, r#""format_version":"2""#)),
            "header.format_version: expected \"1\", found \"2\""
        );
        assert!(message(mutate("\"r1\":0", "\"r1\":1")).starts_with("header.scheme"));
    }

    #[test]
    fn missing_edge_reported() {
        let text = constructed(2, 4)
            .to_json()
            .replacen("    {\"u\":2,\"w\":1,\"c\":2},\n", "", 1);
        assert_eq!(
            message(ColoringFile::parse(&text).unwrap_err()),
            "edges: 15 entries, expected 16; first missing edge (2, 1)"
        );
    }

    #[test]
    fn syntax_errors_surface_as_json() {
        assert!(matches!(
            ColoringFile::parse("{\"header\": "),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            ColoringFile::parse(
                &constructed(2, 4)
                    .to_json()
                    .replace("\"edges\"", "\"edgez\"")
            ),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn dot_export() {
        let f = constructed(2, 4);
        let dot = to_dot(&f.coloring, &f.labels).unwrap();
        assert!(dot.starts_with("// palette: 1=#e41a1c 2=#377eb8 3=#4daf4a\ngraph K_4_4 {\n"));
        assert!(dot.contains("edge [colorscheme=set13];"));
        assert!(dot.contains(
            "  subgraph side_U { rank=same; \"U:1:1\"; \"U:2:1\"; \"U:3:1\"; \"U:4:1\"; }"
        ));
        assert!(dot.contains("  \"U:1:1\" -- \"W:2:1\" [color=3];"));
        assert_eq!(dot.matches("[color=").count(), 16);
        let four = EdgeColoring::new(2, 4, vec![1, 2, 3, 4]).unwrap();
        assert!(to_dot(&four, &Labels::plain(2)).is_err());
    }

    #[test]
    fn labels_lookup() {
        let l = Labels::plain(3);
        assert_eq!(l.find("W:3"), Some(Vertex::w(2)));
        assert_eq!(l.find("U:1"), Some(Vertex::u(0)));
        assert_eq!(l.find("X:1"), None);
        assert_eq!(l.of(Vertex::w(1)), "W:2");
    }
}
