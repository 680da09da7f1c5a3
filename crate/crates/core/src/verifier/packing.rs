//! Maximum sets of internally disjoint paths among a [`PathCandidateSet`].
//!
//! With paths of at most two internal vertices the problem is a maximum
//! matching. Take one node per internal vertex and one pendant node per
//! middle vertex of a two-edge path; a two-edge path `u, a, v` becomes the
//! edge `a - pendant(a)`, a three-edge path `u, a, b, v` the edge `a - b`.
//! Disjoint paths are exactly the matchings. The graph is bipartite with `W`
//! vertices and pendants of `U` vertices on the left, so augmenting paths
//! suffice. Longer candidates fall back to exact branch and bound.

use crate::error::Result;
use crate::graph::{EdgeColoring, RainbowPath, Side, Vertex};

use super::candidates::PathCandidateSet;

/// Index of a candidate inside its bucket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Candidate {
    Direct,
    One(usize),
    Two(usize),
    Longer(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    /// `min(maximum packing, cutoff)`.
    pub size: usize,
    pub chosen: Vec<Candidate>,
}

impl Packing {
    pub fn paths(&self, cands: &PathCandidateSet) -> Vec<Vec<Vertex>> {
        self.chosen
            .iter()
            .map(|c| match *c {
                Candidate::Direct => vec![cands.u, cands.v],
                Candidate::One(i) => vec![cands.u, cands.one_internal[i], cands.v],
                Candidate::Two(i) => {
                    let (a, b) = cands.two_internal[i];
                    vec![cands.u, a, b, cands.v]
                }
                Candidate::Longer(i) => {
                    let mut p = vec![cands.u];
                    p.extend_from_slice(&cands.longer[i]);
                    p.push(cands.v);
                    p
                }
            })
            .collect()
    }

    pub fn rainbow_paths(
        &self,
        cands: &PathCandidateSet,
        coloring: &EdgeColoring,
    ) -> Result<Vec<RainbowPath>> {
        self.paths(cands)
            .into_iter()
            .map(|p| RainbowPath::new(p, coloring))
            .collect()
    }
}

/// Largest number of pairwise internally disjoint candidates, capped at `cutoff`.
pub fn max_disjoint_packing(cands: &PathCandidateSet, cutoff: usize) -> Packing {
    let mut chosen = Vec::new();
    if cutoff == 0 {
        return Packing { size: 0, chosen };
    }
    if cands.direct {
        chosen.push(Candidate::Direct);
    }
    let want = cutoff - chosen.len();
    if want > 0 {
        if cands.longer.is_empty() {
            chosen.extend(matching_packing(cands, want));
            debug_assert!(
                chosen.len() <= cands.short_internal_vertices() + usize::from(cands.direct),
                "packing exceeds its vertex bound"
            );
        } else {
            chosen.extend(branch_and_bound(cands, want));
        }
    }
    Packing {
        size: chosen.len(),
        chosen,
    }
}

fn matching_packing(cands: &PathCandidateSet, want: usize) -> Vec<Candidate> {
    let r = cands.r;
    // Node keys: 2 * vertex id (+1 for the pendant). Left side holds W vertices
    // and pendants of U vertices.
    let is_left = |key: usize| {
        let v = Vertex::from_id(key / 2, r);
        (v.side == Side::W) != (key % 2 == 1)
    };
    let mut edges: Vec<(usize, usize, Candidate)> = Vec::new();
    for (i, &a) in cands.one_internal.iter().enumerate() {
        let (x, y) = (2 * a.id(r), 2 * a.id(r) + 1);
        edges.push(if is_left(x) {
            (x, y, Candidate::One(i))
        } else {
            (y, x, Candidate::One(i))
        });
    }
    for (i, &(a, b)) in cands.two_internal.iter().enumerate() {
        let (x, y) = (2 * a.id(r), 2 * b.id(r));
        edges.push(if is_left(x) {
            (x, y, Candidate::Two(i))
        } else {
            (y, x, Candidate::Two(i))
        });
    }
    // Ascending node keys keep augmentation order, and so witnesses, deterministic.
    edges.sort_by_key(|&(l, rt, _)| (l, rt));

    let nodes = 4 * r;
    let mut adj: Vec<Vec<(usize, Candidate)>> = vec![Vec::new(); nodes];
    for &(l, rt, c) in &edges {
        adj[l].push((rt, c));
    }
    let lefts: Vec<usize> = (0..nodes).filter(|&l| !adj[l].is_empty()).collect();

    let mut mate_of_right: Vec<Option<(usize, Candidate)>> = vec![None; nodes];
    let mut size = 0;
    let mut stamp = vec![0usize; nodes];
    for (round, &l) in lefts.iter().enumerate() {
        if size >= want {
            break;
        }
        if augment(l, round + 1, &adj, &mut mate_of_right, &mut stamp) {
            size += 1;
        }
    }
    let mut out: Vec<Candidate> = mate_of_right.iter().flatten().map(|&(_, c)| c).collect();
    out.sort();
    out
}

fn augment(
    l: usize,
    round: usize,
    adj: &[Vec<(usize, Candidate)>],
    mate: &mut [Option<(usize, Candidate)>],
    stamp: &mut [usize],
) -> bool {
    for &(rt, c) in &adj[l] {
        if stamp[rt] == round {
            continue;
        }
        stamp[rt] = round;
        let free = match mate[rt] {
            None => true,
            Some((other, _)) => augment(other, round, adj, mate, stamp),
        };
        if free {
            mate[rt] = Some((l, c));
            return true;
        }
    }
    false
}

struct Bnb {
    masks: Vec<Vec<u64>>,
    sizes: Vec<usize>,
    want: usize,
    best: Vec<usize>,
}

impl Bnb {
    fn disjoint(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & y == 0)
    }

    fn search(&mut self, from: usize, used: &mut Vec<u64>, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            if self.best.len() >= self.want {
                return true;
            }
        }
        let compat: Vec<usize> = (from..self.masks.len())
            .filter(|&i| Self::disjoint(&self.masks[i], used))
            .collect();
        if compat.is_empty() {
            return false;
        }
        // Bound: no more paths than candidates left, nor than free vertices
        // they cover divided by the smallest path.
        let mut cover = vec![0u64; used.len()];
        for &i in &compat {
            for (c, m) in cover.iter_mut().zip(&self.masks[i]) {
                *c |= m;
            }
        }
        let free: usize = cover.iter().map(|w| w.count_ones() as usize).sum();
        let min_size = compat.iter().map(|&i| self.sizes[i]).min().unwrap().max(1);
        let bound = chosen.len() + compat.len().min(free / min_size);
        if bound <= self.best.len() {
            return false;
        }
        for &i in &compat {
            for (u, m) in used.iter_mut().zip(&self.masks[i]) {
                *u |= m;
            }
            chosen.push(i);
            let done = self.search(i + 1, used, chosen);
            chosen.pop();
            for (u, m) in used.iter_mut().zip(&self.masks[i]) {
                *u &= !m;
            }
            if done {
                return true;
            }
        }
        false
    }
}

fn branch_and_bound(cands: &PathCandidateSet, want: usize) -> Vec<Candidate> {
    let r = cands.r;
    let words = (2 * r).div_ceil(64);
    let mut items: Vec<(Candidate, Vec<Vertex>)> = Vec::new();
    items.extend(
        cands
            .one_internal
            .iter()
            .enumerate()
            .map(|(i, &a)| (Candidate::One(i), vec![a])),
    );
    items.extend(
        cands
            .two_internal
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (Candidate::Two(i), vec![a, b])),
    );
    items.extend(
        cands
            .longer
            .iter()
            .enumerate()
            .map(|(i, m)| (Candidate::Longer(i), m.clone())),
    );
    // Short paths first: the greedy start and the bound both benefit.
    items.sort_by_key(|(c, m)| (m.len(), *c));

    let masks: Vec<Vec<u64>> = items
        .iter()
        .map(|(_, m)| {
            let mut mask = vec![0u64; words];
            for v in m {
                let id = v.id(r);
                mask[id / 64] |= 1 << (id % 64);
            }
            mask
        })
        .collect();

    let mut greedy = Vec::new();
    let mut used = vec![0u64; words];
    for (i, mask) in masks.iter().enumerate() {
        if greedy.len() < want && Bnb::disjoint(mask, &used) {
            for (u, m) in used.iter_mut().zip(mask) {
                *u |= m;
            }
            greedy.push(i);
        }
    }

    let mut bnb = Bnb {
        sizes: items.iter().map(|(_, m)| m.len()).collect(),
        masks,
        want,
        best: greedy,
    };
    if bnb.best.len() < want {
        bnb.search(0, &mut vec![0u64; words], &mut Vec::new());
    }
    let mut out: Vec<Candidate> = bnb.best.iter().map(|&i| items[i].0).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(r: usize, u: Vertex, v: Vertex) -> PathCandidateSet {
        PathCandidateSet::new(r, u, v)
    }

    #[test]
    fn distinct_middles_never_conflict() {
        let mut c = set(4, Vertex::u(0), Vertex::u(1));
        c.one_internal = vec![Vertex::w(0), Vertex::w(3)];
        assert_eq!(max_disjoint_packing(&c, usize::MAX).size, 2);
    }

    #[test]
    fn shared_internal_vertex_conflicts() {
        let mut c = set(4, Vertex::u(0), Vertex::w(0));
        c.two_internal = vec![(Vertex::w(1), Vertex::u(1)), (Vertex::w(1), Vertex::u(2))];
        assert_eq!(max_disjoint_packing(&c, usize::MAX).size, 1);
    }

    #[test]
    fn direct_edge_adds_to_the_matching() {
        let mut c = set(4, Vertex::u(0), Vertex::w(0));
        c.direct = true;
        c.two_internal = vec![(Vertex::w(1), Vertex::u(1))];
        // an extra, unrelated one-internal candidate on the other side
        c.one_internal = vec![Vertex::w(2)];
        let p = max_disjoint_packing(&c, usize::MAX);
        assert_eq!(p.size, 3);
        assert_eq!(
            p.chosen,
            vec![Candidate::Direct, Candidate::One(0), Candidate::Two(0)]
        );
    }

    #[test]
    fn augmenting_path_reroutes_earlier_choice() {
        // (w1,u1) and (w1,u2), (w2,u1): greedy on w1-u1 blocks w2; the
        // augmenting path moves w1 to u2.
        let mut c = set(4, Vertex::u(0), Vertex::w(0));
        c.two_internal = vec![
            (Vertex::w(1), Vertex::u(1)),
            (Vertex::w(1), Vertex::u(2)),
            (Vertex::w(2), Vertex::u(1)),
        ];
        let p = max_disjoint_packing(&c, usize::MAX);
        assert_eq!(p.size, 2);
        assert_eq!(p.chosen, vec![Candidate::Two(1), Candidate::Two(2)]);
    }

    #[test]
    fn cutoff_caps_the_size() {
        let mut c = set(6, Vertex::u(0), Vertex::u(1));
        c.one_internal = (0..6).map(Vertex::w).collect();
        assert_eq!(max_disjoint_packing(&c, 4).size, 4);
        assert_eq!(max_disjoint_packing(&c, 0).size, 0);
        c.direct = false;
        c.longer = vec![vec![Vertex::w(0), Vertex::u(2), Vertex::w(1)]];
        assert_eq!(max_disjoint_packing(&c, 3).size, 3);
        assert_eq!(max_disjoint_packing(&c, usize::MAX).size, 6);
    }

    #[test]
    fn branch_and_bound_prefers_two_short_over_one_long() {
        let mut c = set(4, Vertex::u(0), Vertex::u(1));
        c.longer = vec![
            vec![Vertex::w(0), Vertex::u(2), Vertex::w(1)],
            vec![Vertex::w(2), Vertex::u(3), Vertex::w(3)],
            vec![Vertex::w(0), Vertex::u(3), Vertex::w(2)],
        ];
        assert_eq!(max_disjoint_packing(&c, usize::MAX).size, 2);
        c.one_internal = vec![Vertex::w(0)];
        let p = max_disjoint_packing(&c, usize::MAX);
        assert_eq!(p.size, 2);
        assert!(p.chosen.contains(&Candidate::One(0)));
    }
}
