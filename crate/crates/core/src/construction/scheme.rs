use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, Edge, EdgeColoring, Label, Labeling, Side, Vertex, VertexRef};

/// `g(k) = 2k * ceil(k/2)`, the smallest side size the 3-coloring handles.
pub fn g_threshold(k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k} must be at least 2")));
    }
    Ok(2 * k * k.div_ceil(2))
}

/// Decomposition of each side of `K_{r,r}` into `2k` groups.
///
/// Side `U` is split as `r = k1 * 2k + r1`: group `i` holds the grouped
/// vertices `u_{i,1} .. u_{i,k1}` and, when `i <= r1`, also the extra `u_i`.
/// Side `W` is split the same way. `r1 = 0` is allowed and simply means no
/// extras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartitionScheme {
    labeling: Labeling,
}

pub fn make_scheme(k: usize, r: usize) -> Result<PartitionScheme> {
    let threshold = g_threshold(k)?;
    if r < threshold {
        return Err(Error::Threshold { k, r, threshold });
    }
    let k1 = r / (2 * k);
    let r1 = r % (2 * k);
    let scheme = PartitionScheme {
        labeling: Labeling::new(k, k1, r1)?,
    };
    debug_assert!(k1 >= scheme.m());
    debug_assert_eq!(scheme.r(), r);
    Ok(scheme)
}

/// Slot of an abstract vertex: a 1-based slot index or the extra of its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Index(usize),
    Extra,
}

/// A vertex described only by side, group and slot. Coloring depends on
/// nothing else, which is what makes the symmetry transforms work; an
/// abstract extra may name a group that has no real extra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbstractVertex {
    pub side: Side,
    pub group: usize,
    pub slot: Slot,
}

impl AbstractVertex {
    pub fn grouped(side: Side, group: usize, slot: usize) -> Self {
        AbstractVertex {
            side,
            group,
            slot: Slot::Index(slot),
        }
    }

    pub fn of(v: &VertexRef) -> Self {
        match v.label {
            Label::Grouped { group, slot } => AbstractVertex::grouped(v.side, group, slot),
            Label::Extra { index } => AbstractVertex {
                side: v.side,
                group: index,
                slot: Slot::Extra,
            },
        }
    }
}

/// Color rule on abstract labels, `a` on side `U` and `b` on side `W`,
/// with `groups = 2k`:
/// color 1 for same group parity and equal slot (extras count as equal),
/// color 2 when `a.group == b.group + 1` cyclically, color 3 otherwise.
pub(crate) fn abstract_color(groups: usize, a: &AbstractVertex, b: &AbstractVertex) -> Color {
    debug_assert!(a.side == Side::U && b.side == Side::W);
    let g1 = (a.group + b.group).is_multiple_of(2) && a.slot == b.slot;
    let g2 = a.group % groups == (b.group % groups + 1) % groups;
    // G2 joins groups of opposite parity, G1 groups of equal parity.
    debug_assert!(!(g1 && g2), "color classes 1 and 2 overlap at {a:?}-{b:?}");
    if g1 {
        1
    } else if g2 {
        2
    } else {
        3
    }
}

impl PartitionScheme {
    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn k(&self) -> usize {
        self.labeling.k
    }

    pub fn k1(&self) -> usize {
        self.labeling.k1
    }

    pub fn r1(&self) -> usize {
        self.labeling.r1
    }

    pub fn r(&self) -> usize {
        self.labeling.r()
    }

    /// `ceil(k/2)`, the minimum slot count.
    pub fn m(&self) -> usize {
        self.k().div_ceil(2)
    }

    pub fn groups(&self) -> usize {
        self.labeling.groups()
    }

    pub fn group_size(&self, group: usize) -> usize {
        self.k1() + usize::from(group <= self.r1())
    }

    /// Members of group `group` on `side`, grouped vertices first.
    pub fn group_members(&self, side: Side, group: usize) -> Result<Vec<VertexRef>> {
        let mut out = (1..=self.k1())
            .map(|slot| self.labeling.vertex(side, Label::Grouped { group, slot }))
            .collect::<Result<Vec<_>>>()?;
        if group <= self.r1() {
            out.push(self.labeling.vertex(side, Label::Extra { index: group })?);
        }
        Ok(out)
    }

    pub fn vertex(&self, v: Vertex) -> Result<VertexRef> {
        self.labeling.vertex_at(v)
    }

    /// Maps an abstract vertex to the real vertex, if it exists.
    pub fn resolve(&self, v: &AbstractVertex) -> Result<VertexRef> {
        let label = match v.slot {
            Slot::Index(slot) => Label::Grouped {
                group: v.group,
                slot,
            },
            Slot::Extra => Label::Extra { index: v.group },
        };
        self.labeling.vertex(v.side, label)
    }

    #[cfg(test)]
    pub(crate) fn abstract_color(&self, a: &AbstractVertex, b: &AbstractVertex) -> Color {
        match (a.side, b.side) {
            (Side::U, Side::W) => abstract_color(self.groups(), a, b),
            (Side::W, Side::U) => abstract_color(self.groups(), b, a),
            _ => panic!("abstract vertices {a:?} and {b:?} are not adjacent"),
        }
    }

    pub fn in_g1(&self, e: &Edge) -> bool {
        match (e.u.label, e.w.label) {
            (Label::Grouped { group: i, slot: p }, Label::Grouped { group: j, slot: q }) => {
                p == q && (i + j) % 2 == 0
            }
            (Label::Extra { index: i }, Label::Extra { index: j }) => (i + j) % 2 == 0,
            _ => false,
        }
    }

    /// Membership in `H_i`: `U_i` against `W_{i-1}`, with `W_{2k}` for `i = 1`.
    pub fn in_g2(&self, e: &Edge) -> bool {
        let i = e.u.group();
        let j = e.w.group();
        let prev = if i == 1 { self.groups() } else { i - 1 };
        j == prev
    }

    pub fn color_of_edge(&self, e: &Edge) -> Color {
        let g1 = self.in_g1(e);
        let g2 = self.in_g2(e);
        assert!(!(g1 && g2), "edge {}-{} lies in both G1 and G2", e.u, e.w);
        if g1 {
            1
        } else if g2 {
            2
        } else {
            3
        }
    }
}

/// The 3-edge-coloring of `K_{r,r}` defined by `scheme`.
pub fn build_coloring(scheme: &PartitionScheme) -> EdgeColoring {
    let r = scheme.r();
    let labels: Vec<AbstractVertex> = (0..r)
        .map(|flat| AbstractVertex::of(&scheme.labeling.vertex_at(Vertex::u(flat)).unwrap()))
        .collect();
    let groups = scheme.groups();
    let mut assignment = vec![0; r * r];
    assignment
        .par_chunks_mut(r)
        .enumerate()
        .for_each(|(u, row)| {
            let a = labels[u];
            for (w, slot) in row.iter_mut().enumerate() {
                let b = AbstractVertex {
                    side: Side::W,
                    ..labels[w]
                };
                *slot = abstract_color(groups, &a, &b);
            }
        });
    EdgeColoring::new(r, 3, assignment).expect("construction yields a valid 3-coloring")
}
