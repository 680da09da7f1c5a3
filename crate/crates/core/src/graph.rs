//! Vertices, labels, edge colorings and rainbow paths of a complete bipartite
//! graph `K_{r,r}`.
//!
//! Every vertex lives on one of two sides, `U` or `W`, and carries a 0-based
//! *flat* index inside its side. The construction additionally names vertices
//! by a structured [`Label`]: grouped vertices `u_{i,p}` (group `i` in
//! `1..=2k`, slot `p` in `1..=k1`) followed by the extras `u_i` (`i` in
//! `1..=r1`). [`Labeling`] converts between the two.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Color of an edge. Colors are `1..=c`.
pub type Color = u8;

/// Largest number of colors an [`EdgeColoring`] may carry.
pub const MAX_COLORS: usize = 255;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    U,
    W,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::U => "U",
            Side::W => "W",
        })
    }
}

/// An unlabeled vertex: side plus 0-based flat index within the side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub flat: usize,
}

impl Vertex {
    pub fn u(flat: usize) -> Self {
        Vertex {
            side: Side::U,
            flat,
        }
    }

    pub fn w(flat: usize) -> Self {
        Vertex {
            side: Side::W,
            flat,
        }
    }

    /// Global index in `0..2r`: `U` vertices first, then `W`.
    pub fn id(self, r: usize) -> usize {
        match self.side {
            Side::U => self.flat,
            Side::W => r + self.flat,
        }
    }

    pub fn from_id(id: usize, r: usize) -> Self {
        if id < r {
            Vertex::u(id)
        } else {
            Vertex::w(id - r)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.side, self.flat)
    }
}

/// Structured, 1-based name of a vertex within its side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Grouped { group: usize, slot: usize },
    Extra { index: usize },
}

/// The parameters needed to translate labels to flat indices: `2k` groups of
/// `k1` slots, followed by `r1` extras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub k: usize,
    pub k1: usize,
    pub r1: usize,
}

impl Labeling {
    pub fn new(k: usize, k1: usize, r1: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        if r1 >= 2 * k {
            return Err(Error::Parameter(format!(
                "r1 = {r1} must be below 2k = {}",
                2 * k
            )));
        }
        Ok(Labeling { k, k1, r1 })
    }

    pub fn groups(&self) -> usize {
        2 * self.k
    }

    /// Side size `r = 2k * k1 + r1`.
    pub fn r(&self) -> usize {
        self.groups() * self.k1 + self.r1
    }

    pub fn flat_index(&self, label: Label) -> Result<usize> {
        match label {
            Label::Grouped { group, slot } => {
                if !(1..=self.groups()).contains(&group) {
                    return Err(Error::Labeling(format!(
                        "group {group} outside 1..={}",
                        self.groups()
                    )));
                }
                if !(1..=self.k1).contains(&slot) {
                    return Err(Error::Labeling(format!(
                        "slot {slot} outside 1..={}",
                        self.k1
                    )));
                }
                Ok((group - 1) * self.k1 + (slot - 1))
            }
            Label::Extra { index } => {
                if !(1..=self.r1).contains(&index) {
                    return Err(Error::Labeling(if self.r1 == 0 {
                        format!("extra {index} requested but there are no extras")
                    } else {
                        format!("extra {index} outside 1..={}", self.r1)
                    }));
                }
                Ok(self.groups() * self.k1 + (index - 1))
            }
        }
    }

    pub fn from_flat(&self, flat: usize) -> Result<Label> {
        let grouped = self.groups() * self.k1;
        if flat < grouped {
            Ok(Label::Grouped {
                group: flat / self.k1 + 1,
                slot: flat % self.k1 + 1,
            })
        } else if flat < self.r() {
            Ok(Label::Extra {
                index: flat - grouped + 1,
            })
        } else {
            Err(Error::Labeling(format!(
                "flat index {flat} outside 0..{}",
                self.r()
            )))
        }
    }

    pub fn vertex(&self, side: Side, label: Label) -> Result<VertexRef> {
        let flat = self.flat_index(label)?;
        Ok(VertexRef { side, label, flat })
    }

    pub fn vertex_at(&self, v: Vertex) -> Result<VertexRef> {
        let label = self.from_flat(v.flat)?;
        Ok(VertexRef {
            side: v.side,
            label,
            flat: v.flat,
        })
    }

    /// Parses `U:<group>:<slot>` or `U:e:<i>` (and the `W` forms).
    pub fn parse(&self, text: &str) -> Result<VertexRef> {
        let spec: LabelSpec = text.parse()?;
        self.vertex(spec.side, spec.label)
    }
}

/// A vertex of `K_{r,r}` with both its structured label and its flat index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexRef {
    pub side: Side,
    pub label: Label,
    pub flat: usize,
}

impl VertexRef {
    pub fn vertex(&self) -> Vertex {
        Vertex {
            side: self.side,
            flat: self.flat,
        }
    }

    /// Group of the vertex; extra `i` belongs to group `i`.
    pub fn group(&self) -> usize {
        match self.label {
            Label::Grouped { group, .. } => group,
            Label::Extra { index } => index,
        }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LabelSpec {
            side: self.side,
            label: self.label,
        }
        .fmt(f)
    }
}

/// A parsed label string that has not yet been checked against a labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelSpec {
    pub side: Side,
    pub label: Label,
}

impl fmt::Display for LabelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Label::Grouped { group, slot } => write!(f, "{}:{}:{}", self.side, group, slot),
            Label::Extra { index } => write!(f, "{}:e:{}", self.side, index),
        }
    }
}

impl FromStr for LabelSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Labeling(format!("cannot parse label {text:?}"));
        let mut parts = text.split(':');
        let side = match parts.next() {
            Some("U") => Side::U,
            Some("W") => Side::W,
            _ => return Err(bad()),
        };
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let number = |s: &str| -> Result<usize> {
            // Reject signs and leading zeros so that printing is the exact inverse.
            if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) || s.starts_with('0') {
                return Err(bad());
            }
            s.parse().map_err(|_| bad())
        };
        let label = if a == "e" {
            Label::Extra { index: number(b)? }
        } else {
            Label::Grouped {
                group: number(a)?,
                slot: number(b)?,
            }
        };
        Ok(LabelSpec { side, label })
    }
}

/// An edge of `K_{r,r}`, stored with its `U` endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexRef,
    pub w: VertexRef,
}

impl Edge {
    pub fn new(u: VertexRef, w: VertexRef) -> Result<Self> {
        match (u.side, w.side) {
            (Side::U, Side::W) => Ok(Edge { u, w }),
            (Side::W, Side::U) => Ok(Edge { u: w, w: u }),
            _ => Err(Error::Parameter(format!(
                "{u} and {w} lie on the same side and are not adjacent"
            ))),
        }
    }
}

/// A total map from the `r^2` edges of `K_{r,r}` to colors `1..=colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    r: usize,
    colors: usize,
    // row-major: assignment[u * r + w]
    assignment: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(r: usize, colors: usize, assignment: Vec<Color>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Parameter("r must be at least 1".into()));
        }
        if colors == 0 || colors > MAX_COLORS {
            return Err(Error::Parameter(format!(
                "color count {colors} outside 1..={MAX_COLORS}"
            )));
        }
        if assignment.len() != r * r {
            return Err(Error::Parameter(format!(
                "assignment has {} entries, expected r^2 = {}",
                assignment.len(),
                r * r
            )));
        }
        if let Some(pos) = assignment
            .iter()
            .position(|&c| c == 0 || usize::from(c) > colors)
        {
            return Err(Error::Parameter(format!(
                "edge (u={}, w={}) has color {} outside 1..={colors}",
                pos / r,
                pos % r,
                assignment[pos]
            )));
        }
        Ok(EdgeColoring {
            r,
            colors,
            assignment,
        })
    }

    pub fn monochromatic(r: usize) -> Self {
        EdgeColoring {
            r,
            colors: 1,
            assignment: vec![1; r * r],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn assignment(&self) -> &[Color] {
        &self.assignment
    }

    #[inline]
    pub fn color(&self, u_flat: usize, w_flat: usize) -> Color {
        self.assignment[u_flat * self.r + w_flat]
    }

    /// Color of the edge between `a` and `b`, or `None` if they are not adjacent.
    #[inline]
    pub fn color_between(&self, a: Vertex, b: Vertex) -> Option<Color> {
        match (a.side, b.side) {
            (Side::U, Side::W) => Some(self.color(a.flat, b.flat)),
            (Side::W, Side::U) => Some(self.color(b.flat, a.flat)),
            _ => None,
        }
    }

    pub fn edge_color(&self, e: &Edge) -> Color {
        self.color(e.u.flat, e.w.flat)
    }

    /// Number of edges per color; index 0 is color 1.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.colors];
        for &c in &self.assignment {
            hist[usize::from(c) - 1] += 1;
        }
        hist
    }

    /// Number of distinct colors that actually occur.
    pub fn colors_used(&self) -> usize {
        self.histogram().iter().filter(|&&n| n > 0).count()
    }

    /// Applies `perm`, where color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<Self> {
        if perm.len() != self.colors {
            return Err(Error::Parameter(format!(
                "permutation has {} entries for {} colors",
                perm.len(),
                self.colors
            )));
        }
        let mut seen = ColorSet::new();
        for &c in perm {
            if c == 0 || usize::from(c) > self.colors || !seen.insert(c) {
                return Err(Error::Parameter(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(EdgeColoring {
            r: self.r,
            colors: self.colors,
            assignment: self
                .assignment
                .iter()
                .map(|&c| perm[usize::from(c) - 1])
                .collect(),
        })
    }
}

/// Bitset over the colors `0..=255`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ColorSet([u64; 4]);

impl ColorSet {
    pub fn new() -> Self {
        ColorSet([0; 4])
    }

    #[inline]
    pub fn contains(&self, c: Color) -> bool {
        self.0[usize::from(c >> 6)] & (1 << (c & 63)) != 0
    }

    /// Returns false if `c` was already present.
    #[inline]
    pub fn insert(&mut self, c: Color) -> bool {
        let fresh = !self.contains(c);
        self.0[usize::from(c >> 6)] |= 1 << (c & 63);
        fresh
    }

    #[inline]
    pub fn remove(&mut self, c: Color) {
        self.0[usize::from(c >> 6)] &= !(1 << (c & 63));
    }
}

fn check_path_shape(vertices: &[Vertex], r: usize) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::MalformedPath(format!(
            "a path needs at least two vertices, got {}",
            vertices.len()
        )));
    }
    if let Some(v) = vertices.iter().find(|v| v.flat >= r) {
        return Err(Error::MalformedPath(format!(
            "vertex {v} outside K_{{{r},{r}}}"
        )));
    }
    for pair in vertices.windows(2) {
        if pair[0].side == pair[1].side {
            return Err(Error::MalformedPath(format!(
                "consecutive vertices {} and {} are on the same side",
                pair[0], pair[1]
            )));
        }
    }
    let mut ids: Vec<usize> = vertices.iter().map(|v| v.id(r)).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::MalformedPath(format!(
            "vertex {} repeats",
            Vertex::from_id(w[0], r)
        )));
    }
    Ok(())
}

/// Whether the simple alternating path `vertices` has pairwise distinct edge colors.
pub fn path_is_rainbow(vertices: &[Vertex], coloring: &EdgeColoring) -> Result<bool> {
    check_path_shape(vertices, coloring.r())?;
    let mut seen = ColorSet::new();
    Ok(vertices.windows(2).all(|pair| {
        let c = coloring
            .color_between(pair[0], pair[1])
            .expect("shape check guarantees alternation");
        seen.insert(c)
    }))
}

/// A simple path whose edges carry pairwise distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RainbowPath {
    vertices: Vec<Vertex>,
    colors: Vec<Color>,
}

impl RainbowPath {
    pub fn new(vertices: Vec<Vertex>, coloring: &EdgeColoring) -> Result<Self> {
        if !path_is_rainbow(&vertices, coloring)? {
            return Err(Error::MalformedPath(format!(
                "path {} is not rainbow",
                display_path(&vertices)
            )));
        }
        let colors: Vec<Color> = vertices
            .windows(2)
            .map(|p| coloring.color_between(p[0], p[1]).unwrap())
            .collect();
        assert!(
            colors.len() <= coloring.colors(),
            "rainbow path longer than the number of colors"
        );
        Ok(RainbowPath { vertices, colors })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn internal(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut colors = self.colors.clone();
        colors.reverse();
        RainbowPath { vertices, colors }
    }

    /// Renders the path with structured labels, e.g. `U:1:1 -3- W:2:1 -2- U:3:1`.
    pub fn display_with(&self, labeling: &Labeling) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push_str(&format!(" -{}- ", self.colors[i - 1]));
            }
            match labeling.vertex_at(*v) {
                Ok(vr) => out.push_str(&vr.to_string()),
                Err(_) => out.push_str(&v.to_string()),
            }
        }
        out
    }
}

fn display_path(vertices: &[Vertex]) -> String {
    vertices
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_index_examples() {
        let l = Labeling::new(4, 2, 2).unwrap();
        assert_eq!(
            l.flat_index(Label::Grouped { group: 1, slot: 1 }).unwrap(),
            0
        );
        assert_eq!(
            l.flat_index(Label::Grouped { group: 3, slot: 2 }).unwrap(),
            5
        );
        assert_eq!(l.flat_index(Label::Extra { index: 2 }).unwrap(), 17);
        assert_eq!(l.r(), 18);
    }

    #[test]
    fn from_flat_examples() {
        let l = Labeling::new(4, 2, 2).unwrap();
        assert_eq!(
            l.from_flat(0).unwrap(),
            Label::Grouped { group: 1, slot: 1 }
        );
        assert_eq!(l.from_flat(16).unwrap(), Label::Extra { index: 1 });
        assert_eq!(
            l.from_flat(5).unwrap(),
            Label::Grouped { group: 3, slot: 2 }
        );
        assert!(matches!(l.from_flat(18), Err(Error::Labeling(_))));
    }

    #[test]
    fn out_of_range_labels() {
        let l = Labeling::new(4, 2, 0).unwrap();
        for bad in [
            Label::Grouped { group: 0, slot: 1 },
            Label::Grouped { group: 9, slot: 1 },
            Label::Grouped { group: 1, slot: 3 },
            Label::Extra { index: 1 },
        ] {
            assert!(
                matches!(l.flat_index(bad), Err(Error::Labeling(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn label_grammar() {
        let l = Labeling::new(4, 2, 2).unwrap();
        let v = l.parse("W:e:2").unwrap();
        assert_eq!(v.side, Side::W);
        assert_eq!(v.flat, 17);
        assert_eq!(v.to_string(), "W:e:2");
        assert_eq!(l.parse("U:3:2").unwrap().flat, 5);
        for bad in [
            "", "U", "X:1:1", "U:1", "U:1:1:1", "U:01:1", "U:+1:1", "U:e:0", "U:x:1",
        ] {
            assert!(l.parse(bad).is_err(), "{bad}");
        }
    }

    fn two_by_two() -> EdgeColoring {
        // u1w1=1, u1w2=2, u2w1=3, u2w2=4
        EdgeColoring::new(2, 4, vec![1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn single_edge_is_rainbow() {
        let c = EdgeColoring::monochromatic(3);
        assert!(path_is_rainbow(&[Vertex::u(0), Vertex::w(2)], &c).unwrap());
    }

    #[test]
    fn repeated_color_is_not_rainbow() {
        let c = EdgeColoring::monochromatic(2);
        assert!(!path_is_rainbow(&[Vertex::u(0), Vertex::w(0), Vertex::u(1)], &c).unwrap());
        assert!(
            path_is_rainbow(&[Vertex::u(0), Vertex::w(0), Vertex::u(1)], &two_by_two()).unwrap()
        );
    }

    #[test]
    fn malformed_paths_are_rejected() {
        let c = two_by_two();
        for p in [
            vec![Vertex::u(0)],
            vec![Vertex::u(0), Vertex::u(1)],
            vec![Vertex::u(0), Vertex::w(0), Vertex::u(0)],
            vec![Vertex::u(0), Vertex::w(2)],
        ] {
            assert!(
                matches!(path_is_rainbow(&p, &c), Err(Error::MalformedPath(_))),
                "{p:?}"
            );
        }
    }

    #[test]
    fn coloring_validation() {
        assert!(EdgeColoring::new(2, 3, vec![1, 2, 3]).is_err());
        assert!(EdgeColoring::new(2, 3, vec![1, 2, 3, 4]).is_err());
        assert!(EdgeColoring::new(2, 3, vec![1, 0, 3, 1]).is_err());
        let c = EdgeColoring::new(2, 3, vec![1, 2, 3, 1]).unwrap();
        assert_eq!(c.histogram(), vec![2, 1, 1]);
        let p = c.permute_colors(&[3, 1, 2]).unwrap();
        assert_eq!(p.assignment(), &[3, 1, 2, 3]);
        assert!(c.permute_colors(&[1, 1, 2]).is_err());
    }

    #[test]
    fn rainbow_path_accessors() {
        let c = two_by_two();
        let p = RainbowPath::new(
            vec![Vertex::u(0), Vertex::w(1), Vertex::u(1), Vertex::w(0)],
            &c,
        )
        .unwrap();
        assert_eq!(p.colors(), &[2, 4, 3]);
        assert_eq!(p.internal(), &[Vertex::w(1), Vertex::u(1)]);
        assert_eq!(p.reversed().colors(), &[3, 4, 2]);
        assert!(RainbowPath::new(
            vec![Vertex::u(0), Vertex::w(0), Vertex::u(1)],
            &EdgeColoring::monochromatic(2)
        )
        .is_err());
    }
}
