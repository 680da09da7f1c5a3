//! Reduction of an arbitrary vertex pair to a canonical configuration.
//!
//! The coloring only looks at side, group and slot of each endpoint, and it is
//! preserved by three kinds of relabeling:
//!
//! * cyclic group shifts `g -> g + t (mod 2k)` on both sides,
//! * exchanging the sides `U` and `W` together with the reflection
//!   `g -> t - g (mod 2k)`,
//! * a permutation of slots applied to both sides (extras stay put).
//!
//! [`classify_pair`] picks a relabeling that moves the first endpoint onto
//! `u_{1,1}` (or onto the extra `u_1` when both endpoints are extras) and
//! reads the case off the image of the second endpoint.

use std::fmt;

use super::scheme::{AbstractVertex, PartitionScheme, Slot};
use crate::error::{Error, Result};
use crate::graph::{Label, Side, VertexRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// Same side, same group.
    C111,
    /// Same side, another odd group.
    C112,
    /// Same side, group of even index.
    C113,
    /// Opposite side, odd group.
    C121,
    /// Opposite side, even group.
    C122,
    /// Two extras on one side, odd group.
    C211,
    /// Two extras on one side, even group.
    C212,
    /// Extras on opposite sides, odd group.
    C221,
    /// Extras on opposite sides, even group.
    C222,
}

impl CaseTag {
    pub const ALL: [CaseTag; 9] = [
        CaseTag::C111,
        CaseTag::C112,
        CaseTag::C113,
        CaseTag::C121,
        CaseTag::C122,
        CaseTag::C211,
        CaseTag::C212,
        CaseTag::C221,
        CaseTag::C222,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::C111 => "1.1.1",
            CaseTag::C112 => "1.1.2",
            CaseTag::C113 => "1.1.3",
            CaseTag::C121 => "1.2.1",
            CaseTag::C122 => "1.2.2",
            CaseTag::C211 => "2.1.1",
            CaseTag::C212 => "2.1.2",
            CaseTag::C221 => "2.2.1",
            CaseTag::C222 => "2.2.2",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A coloring-preserving relabeling, read as a map from the canonical frame
/// to the frame of the queried pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    /// Number of groups, `2k`.
    pub groups: usize,
    /// Exchange `U` and `W`; implies group reflection.
    pub side_swap: bool,
    /// Group offset `t`: `g -> g + t` without side swap, `g -> t - g` with it.
    pub shift: usize,
    /// Slots `1` and `p` are exchanged when `Some(p)`.
    pub slot_swap: Option<usize>,
}

impl Symmetry {
    pub fn identity(groups: usize) -> Self {
        Symmetry {
            groups,
            side_swap: false,
            shift: 0,
            slot_swap: None,
        }
    }

    fn wrap(&self, g: i64) -> usize {
        let n = self.groups as i64;
        ((g - 1).rem_euclid(n) + 1) as usize
    }

    fn swap_slot(&self, slot: Slot) -> Slot {
        match (slot, self.slot_swap) {
            (Slot::Index(1), Some(p)) => Slot::Index(p),
            (Slot::Index(s), Some(p)) if s == p => Slot::Index(1),
            _ => slot,
        }
    }

    /// Canonical frame to actual frame.
    pub fn apply(&self, v: &AbstractVertex) -> AbstractVertex {
        let (side, group) = if self.side_swap {
            (
                v.side.other(),
                self.wrap(self.shift as i64 - v.group as i64),
            )
        } else {
            (v.side, self.wrap(v.group as i64 + self.shift as i64))
        };
        AbstractVertex {
            side,
            group,
            slot: self.swap_slot(v.slot),
        }
    }

    /// Actual frame to canonical frame.
    pub fn invert(&self, v: &AbstractVertex) -> AbstractVertex {
        let (side, group) = if self.side_swap {
            (
                v.side.other(),
                self.wrap(self.shift as i64 - v.group as i64),
            )
        } else {
            (v.side, self.wrap(v.group as i64 - self.shift as i64))
        };
        AbstractVertex {
            side,
            group,
            slot: self.swap_slot(v.slot),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.side_swap {
            parts.push(format!("side swap with reflection g -> {} - g", self.shift));
        } else if self.shift != 0 {
            parts.push(format!("group rotation g -> g + {}", self.shift));
        }
        if let Some(p) = self.slot_swap {
            parts.push(format!("slot swap 1 <-> {p}"));
        }
        if parts.is_empty() {
            f.write_str("identity")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// The case a pair falls into, with the transform that produces it from its
/// canonical representative.
///
/// Applying `transform` to `canonical_u` and `canonical_v` yields the queried
/// pair, in swapped order when `endpoints_swapped` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseLabel {
    pub tag: CaseTag,
    pub transform: Symmetry,
    pub endpoints_swapped: bool,
    pub canonical_u: AbstractVertex,
    pub canonical_v: AbstractVertex,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} via {}", self.tag, self.transform)?;
        if self.endpoints_swapped {
            f.write_str(", endpoints swapped")?;
        }
        Ok(())
    }
}

pub fn classify_pair(scheme: &PartitionScheme, u: &VertexRef, v: &VertexRef) -> Result<CaseLabel> {
    for x in [u, v] {
        if scheme.labeling().flat_index(x.label)? != x.flat {
            return Err(Error::Labeling(format!(
                "{x} has inconsistent flat index {}",
                x.flat
            )));
        }
    }
    if u.side == v.side && u.flat == v.flat {
        return Err(Error::Parameter(format!("pair endpoints coincide at {u}")));
    }
    let grouped = |x: &VertexRef| matches!(x.label, Label::Grouped { .. });
    let (anchor, other, endpoints_swapped) = if grouped(u) || !grouped(v) {
        (u, v, false)
    } else {
        (v, u, true)
    };
    let a = AbstractVertex::of(anchor);
    let side_swap = a.side == Side::W;
    let shift = (if side_swap { a.group + 1 } else { a.group - 1 }) % scheme.groups();
    let slot_swap = match a.slot {
        Slot::Index(s) if s != 1 => Some(s),
        _ => None,
    };
    let transform = Symmetry {
        groups: scheme.groups(),
        side_swap,
        shift,
        slot_swap,
    };
    let canonical_u = transform.invert(&a);
    let canonical_v = transform.invert(&AbstractVertex::of(other));
    debug_assert_eq!((canonical_u.side, canonical_u.group), (Side::U, 1));

    let g = canonical_v.group;
    let odd = g % 2 == 1;
    let tag = match (canonical_u.slot, canonical_v.side) {
        (Slot::Index(_), Side::U) if g == 1 => CaseTag::C111,
        (Slot::Index(_), Side::U) if odd => CaseTag::C112,
        (Slot::Index(_), Side::U) => CaseTag::C113,
        (Slot::Index(_), Side::W) if odd => CaseTag::C121,
        (Slot::Index(_), Side::W) => CaseTag::C122,
        (Slot::Extra, Side::U) if odd => CaseTag::C211,
        (Slot::Extra, Side::U) => CaseTag::C212,
        (Slot::Extra, Side::W) if odd => CaseTag::C221,
        (Slot::Extra, Side::W) => CaseTag::C222,
    };
    Ok(CaseLabel {
        tag,
        transform,
        endpoints_swapped,
        canonical_u,
        canonical_v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::make_scheme;
    use crate::graph::Vertex;

    fn classify(k: usize, r: usize, u: &str, v: &str) -> CaseLabel {
        let s = make_scheme(k, r).unwrap();
        let l = s.labeling();
        classify_pair(&s, &l.parse(u).unwrap(), &l.parse(v).unwrap()).unwrap()
    }

    #[test]
    fn tag_examples() {
        assert_eq!(classify(4, 18, "U:1:1", "U:1:2").tag, CaseTag::C111);
        assert_eq!(classify(4, 19, "U:e:1", "U:e:3").tag, CaseTag::C211);
        assert_eq!(classify(4, 18, "U:1:1", "W:2:1").tag, CaseTag::C122);
        assert_eq!(classify(4, 18, "U:1:1", "W:1:1").tag, CaseTag::C121);
        assert_eq!(classify(4, 18, "U:e:1", "U:e:2").tag, CaseTag::C212);
        assert_eq!(classify(4, 18, "U:1:1", "U:3:2").tag, CaseTag::C112);
        assert_eq!(classify(4, 18, "U:1:1", "U:2:2").tag, CaseTag::C113);
        assert_eq!(classify(4, 18, "U:e:1", "W:e:1").tag, CaseTag::C221);
        assert_eq!(classify(4, 18, "U:e:1", "W:e:2").tag, CaseTag::C222);
    }

    #[test]
    fn w_side_anchor_records_side_swap() {
        let c = classify(4, 18, "W:3:2", "U:1:1");
        assert!(c.transform.side_swap);
        assert_eq!(c.transform.slot_swap, Some(2));
        assert!(!c.endpoints_swapped);
        assert_eq!(c.canonical_u, AbstractVertex::grouped(Side::U, 1, 1));
    }

    #[test]
    fn extra_with_grouped_swaps_endpoints() {
        let c = classify(4, 18, "U:e:1", "W:5:2");
        assert!(c.endpoints_swapped);
        assert!(c.transform.side_swap);
    }

    #[test]
    fn coincident_endpoints_rejected() {
        let s = make_scheme(4, 18).unwrap();
        let u = s.labeling().parse("U:1:1").unwrap();
        assert!(matches!(
            classify_pair(&s, &u, &u),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn transform_maps_canonical_pair_to_query() {
        for (k, r) in [(2, 7), (3, 14), (4, 18)] {
            let s = make_scheme(k, r).unwrap();
            for a in 0..2 * r {
                for b in 0..2 * r {
                    if a == b {
                        continue;
                    }
                    let u = s.vertex(Vertex::from_id(a, r)).unwrap();
                    let v = s.vertex(Vertex::from_id(b, r)).unwrap();
                    let c = classify_pair(&s, &u, &v).unwrap();
                    let (mu, mv) = (
                        c.transform.apply(&c.canonical_u),
                        c.transform.apply(&c.canonical_v),
                    );
                    let (eu, ev) = if c.endpoints_swapped { (v, u) } else { (u, v) };
                    assert_eq!(mu, AbstractVertex::of(&eu));
                    assert_eq!(mv, AbstractVertex::of(&ev));
                }
            }
        }
    }

    // Two extras of odd groups on one side need r1 >= 3.
    #[test]
    fn every_tag_occurs() {
        let s = make_scheme(4, 19).unwrap();
        let r = s.r();
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..2 * r {
            for b in a + 1..2 * r {
                let u = s.vertex(Vertex::from_id(a, r)).unwrap();
                let v = s.vertex(Vertex::from_id(b, r)).unwrap();
                seen.insert(classify_pair(&s, &u, &v).unwrap().tag);
            }
        }
        assert_eq!(seen.len(), CaseTag::ALL.len());
    }

    #[test]
    fn transforms_preserve_the_coloring() {
        // Spot-check every abstract edge under a spread of transforms.
        for (k, r) in [(2, 5), (3, 13), (4, 18)] {
            let s = make_scheme(k, r).unwrap();
            let n = s.groups();
            let slots: Vec<Slot> = (1..=s.k1()).map(Slot::Index).chain([Slot::Extra]).collect();
            for side_swap in [false, true] {
                for shift in 0..n {
                    for slot_swap in [None, Some(2)] {
                        let t = Symmetry {
                            groups: n,
                            side_swap,
                            shift,
                            slot_swap,
                        };
                        for ga in 1..=n {
                            for gb in 1..=n {
                                for &sa in &slots {
                                    for &sb in &slots {
                                        let a = AbstractVertex {
                                            side: Side::U,
                                            group: ga,
                                            slot: sa,
                                        };
                                        let b = AbstractVertex {
                                            side: Side::W,
                                            group: gb,
                                            slot: sb,
                                        };
                                        assert_eq!(
                                            s.abstract_color(&a, &b),
                                            s.abstract_color(&t.apply(&a), &t.apply(&b)),
                                            "{t:?} on {a:?}-{b:?}"
                                        );
                                        assert_eq!(t.invert(&t.apply(&a)), a);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
