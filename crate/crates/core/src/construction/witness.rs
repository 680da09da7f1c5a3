//! Explicit internally disjoint rainbow paths for every vertex pair.
//!
//! Paths are first written down in the canonical frame of the pair (first
//! endpoint `u_{1,1}` or the extra `u_1`), then carried to the real pair by
//! the transform recorded in its [`CaseLabel`]. The families generalize the
//! single representative configuration of each case (`v in U_3`, `v in W_1`,
//! `v = w_{2,1}` and so on) to every group and slot of `v`:
//!
//! | case  | families (`j` ranges over slots, `g` is the group of `v`) |
//! |-------|------------------------------------------------------------|
//! | 1.1.1 | `u, w_{i,1}, v` for odd `i` |
//! | 1.1.2, 1.1.3, 2.1.x | `u, w_{g-1,j}, v` and `u, w_{2k,j}, v` |
//! | 1.2.1, 2.2.1 | `u, w_{g+1,j}, u_{g+1,j}, v` and `u, w_{2k,j}, u_{2k,j}, v`; for `g = 2k-1` the crossed pair `u, w_{2,j}, u_{2k,j}, v` and `u, w_{2k,j}, u_{2,j}, v` |
//! | 1.2.2 | `u, v`; `u, w_{g+1,j}, u_{g+1,j}, v` (`j >= 2`); one path `u, w_{a,1}, u_{a+1,j}, v`; `u, w_{2k,j}, u_{2k,j}, v` (`j` not the slot of `v`) |
//! | 2.2.2 | `u, w_{g-1,j}, u_{g+1,j}, v` and `u, w_{2k,j}, u_{2k,j}, v` |
//!
//! In case 1.2.2 the middle family `u, w_{a,1}, u_{a+1,j}, v` shares `w_{a,1}`
//! across all `j`, so only one member (the smallest admissible slot) is used.
//! Normally `a = g + 1`; when `g = 2k - 2` that would put `u_{a+1,j}` in group
//! `2k`, which the last family already occupies, so `a = 1` is used instead.
//!
//! With a single slot per group (only possible for `k = 2`) case 1.2.2 can
//! come up short. The families are then topped up greedily with any unused
//! rainbow path of length at most 3 found among the real vertices, extras
//! included. For `k = 2, r = 4` no such path exists and
//! [`Error::WitnessShortfall`] is returned.

use super::cases::{classify_pair, CaseLabel, CaseTag};
use super::scheme::{build_coloring, AbstractVertex, PartitionScheme, Slot};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, RainbowPath, Side, Vertex, VertexRef};

/// Witness path generator for one scheme, holding its coloring.
#[derive(Clone, Debug)]
pub struct WitnessGenerator {
    scheme: PartitionScheme,
    coloring: EdgeColoring,
}

/// The `k` paths between `u` and `v` together with the case that produced them.
#[derive(Clone, Debug)]
pub struct Witnesses {
    pub case: CaseLabel,
    pub paths: Vec<RainbowPath>,
    /// Paths found by the fallback search rather than by a family.
    pub supplemented: usize,
}

pub fn witness_paths(
    scheme: &PartitionScheme,
    u: &VertexRef,
    v: &VertexRef,
) -> Result<Vec<RainbowPath>> {
    Ok(WitnessGenerator::new(*scheme).witnesses(u, v)?.paths)
}

impl WitnessGenerator {
    pub fn new(scheme: PartitionScheme) -> Self {
        let coloring = build_coloring(&scheme);
        WitnessGenerator { scheme, coloring }
    }

    pub fn scheme(&self) -> &PartitionScheme {
        &self.scheme
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn witnesses(&self, u: &VertexRef, v: &VertexRef) -> Result<Witnesses> {
        let case = classify_pair(&self.scheme, u, v)?;
        let canonical = canonical_families(&self.scheme, &case);

        let mut paths = Vec::with_capacity(canonical.len());
        for abstract_path in &canonical {
            let mut vertices = abstract_path
                .iter()
                .map(|x| {
                    self.scheme
                        .resolve(&case.transform.apply(x))
                        .map(|vr| vr.vertex())
                })
                .collect::<Result<Vec<Vertex>>>()?;
            if case.endpoints_swapped {
                vertices.reverse();
            }
            debug_assert_eq!(vertices[0], u.vertex());
            debug_assert_eq!(*vertices.last().unwrap(), v.vertex());
            paths.push(RainbowPath::new(vertices, &self.coloring)?);
        }

        let k = self.scheme.k();
        let mut supplemented = 0;
        if paths.len() < k {
            supplemented = self.top_up(u.vertex(), v.vertex(), &mut paths, k);
        }
        if paths.len() < k {
            return Err(Error::WitnessShortfall {
                tag: case.tag.to_string(),
                found: paths.len(),
                needed: k,
            });
        }
        debug_assert!(internally_disjoint(&paths, self.scheme.r()));
        Ok(Witnesses {
            case,
            paths,
            supplemented,
        })
    }

    /// Greedily appends unused rainbow paths with at most two internal
    /// vertices, scanning internal vertices in ascending flat order.
    fn top_up(&self, u: Vertex, v: Vertex, paths: &mut Vec<RainbowPath>, k: usize) -> usize {
        let r = self.scheme.r();
        let mut used = vec![false; 2 * r];
        used[u.id(r)] = true;
        used[v.id(r)] = true;
        let mut has_direct = false;
        for p in paths.iter() {
            has_direct |= p.len() == 1;
            for x in p.internal() {
                used[x.id(r)] = true;
            }
        }
        let before = paths.len();
        let push = |vertices: Vec<Vertex>, used: &mut Vec<bool>, paths: &mut Vec<RainbowPath>| {
            if let Ok(p) = RainbowPath::new(vertices, &self.coloring) {
                for x in p.internal() {
                    used[x.id(r)] = true;
                }
                paths.push(p);
            }
        };
        if u.side != v.side && !has_direct {
            push(vec![u, v], &mut used, paths);
        }
        let near = u.side.other();
        for a in (0..r).map(|flat| Vertex { side: near, flat }) {
            if paths.len() >= k {
                break;
            }
            if used[a.id(r)] {
                continue;
            }
            if u.side == v.side {
                push(vec![u, a, v], &mut used, paths);
                continue;
            }
            for b in (0..r).map(|flat| Vertex { side: u.side, flat }) {
                if !used[b.id(r)] && !used[a.id(r)] {
                    push(vec![u, a, b, v], &mut used, paths);
                }
            }
        }
        paths.len() - before
    }
}

fn internally_disjoint(paths: &[RainbowPath], r: usize) -> bool {
    let mut seen = vec![false; 2 * r];
    paths.iter().flat_map(|p| p.internal()).all(|x| {
        let id = x.id(r);
        !std::mem::replace(&mut seen[id], true)
    })
}

/// Path families in the canonical frame, in the order they are emitted.
fn canonical_families(scheme: &PartitionScheme, case: &CaseLabel) -> Vec<Vec<AbstractVertex>> {
    let n = scheme.groups();
    let k1 = scheme.k1();
    let wrap = |g: usize| (g + n - 1) % n + 1;
    let uu = |g: usize, j: usize| AbstractVertex::grouped(Side::U, wrap(g), j);
    let ww = |g: usize, j: usize| AbstractVertex::grouped(Side::W, wrap(g), j);
    let u = case.canonical_u;
    let v = case.canonical_v;
    let g = v.group;
    let slots = 1..=k1;
    let mut out = Vec::new();

    // u, w_{g-1,j}, v and u, w_{2k,j}, v
    let two_hop = |out: &mut Vec<Vec<AbstractVertex>>| {
        out.extend(slots.clone().map(|j| vec![u, ww(g - 1, j), v]));
        out.extend(slots.clone().map(|j| vec![u, ww(n, j), v]));
    };
    // v in an odd group of the opposite side
    let odd_cross = |out: &mut Vec<Vec<AbstractVertex>>| {
        if g + 1 < n {
            out.extend(
                slots
                    .clone()
                    .map(|j| vec![u, ww(g + 1, j), uu(g + 1, j), v]),
            );
            out.extend(slots.clone().map(|j| vec![u, ww(n, j), uu(n, j), v]));
        } else {
            out.extend(slots.clone().map(|j| vec![u, ww(2, j), uu(n, j), v]));
            out.extend(slots.clone().map(|j| vec![u, ww(n, j), uu(2, j), v]));
        }
    };

    match case.tag {
        CaseTag::C111 => {
            out.extend((1..n).step_by(2).map(|i| vec![u, ww(i, 1), v]));
        }
        CaseTag::C112 | CaseTag::C113 | CaseTag::C211 | CaseTag::C212 => two_hop(&mut out),
        CaseTag::C121 | CaseTag::C221 => odd_cross(&mut out),
        CaseTag::C122 => {
            let y = v.slot;
            let other_slot = |j: usize| Slot::Index(j) != y;
            out.push(vec![u, v]);
            out.extend((2..=k1).map(|j| vec![u, ww(g + 1, j), uu(g + 1, j), v]));
            let a = if wrap(g + 1) == n - 1 { 1 } else { wrap(g + 1) };
            if let Some(j) = slots.clone().find(|&j| other_slot(j)) {
                out.push(vec![u, ww(a, 1), uu(a + 1, j), v]);
            }
            out.extend(
                slots
                    .clone()
                    .filter(|&j| other_slot(j))
                    .map(|j| vec![u, ww(n, j), uu(n, j), v]),
            );
        }
        CaseTag::C222 => {
            out.extend(
                slots
                    .clone()
                    .map(|j| vec![u, ww(g - 1, j), uu(g + 1, j), v]),
            );
            out.extend(slots.clone().map(|j| vec![u, ww(n, j), uu(n, j), v]));
        }
    }
    out
}
