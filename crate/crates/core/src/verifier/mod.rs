//! Exact check of rainbow k-connectivity for an arbitrary edge-colored `K_{r,r}`.
//!
//! For every unordered vertex pair the verifier enumerates all rainbow paths
//! (no rainbow path is longer than the number of colors) and computes the
//! maximum number of internally disjoint ones, capped at `k`.

mod candidates;
mod packing;

use rayon::prelude::*;

pub use candidates::{enumerate_rainbow_paths, PathCandidateSet};
pub use packing::{max_disjoint_packing, Candidate, Packing};

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, RainbowPath, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPacking {
    pub u: Vertex,
    pub v: Vertex,
    pub packing: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    /// One entry per unordered pair, ordered by global vertex index.
    pub per_pair: Vec<PairPacking>,
    pub min_packing: usize,
    pub ok: bool,
    /// Aligned with `per_pair` when collected.
    pub witnesses: Option<Vec<Vec<RainbowPath>>>,
}

impl VerificationReport {
    /// Pairs attaining `min_packing`, in pair order.
    pub fn worst_pairs(&self) -> impl Iterator<Item = &PairPacking> {
        self.per_pair
            .iter()
            .filter(move |p| p.packing == self.min_packing)
    }
}

/// All unordered pairs `(a, b)`, `a < b` by global index `U` first.
pub fn vertex_pairs(r: usize) -> Vec<(Vertex, Vertex)> {
    let n = 2 * r;
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (Vertex::from_id(a, r), Vertex::from_id(b, r))))
        .collect()
}

fn check_k(coloring: &EdgeColoring, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if k > coloring.r() {
        return Err(Error::Parameter(format!(
            "k = {k} exceeds the connectivity r = {} of K_{{r,r}}",
            coloring.r()
        )));
    }
    Ok(())
}

fn pair_packing(
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    k: usize,
) -> (usize, PathCandidateSet, Packing) {
    let cands = enumerate_rainbow_paths(coloring, u, v, None).expect("distinct in-range pair");
    let packing = max_disjoint_packing(&cands, k);
    (packing.size, cands, packing)
}

/// Computes the packing of every pair in parallel on the current rayon pool.
/// The report does not depend on the number of threads.
pub fn verify_k_connectivity(
    coloring: &EdgeColoring,
    k: usize,
    collect_witnesses: bool,
) -> Result<VerificationReport> {
    check_k(coloring, k)?;
    let pairs = vertex_pairs(coloring.r());
    let results: Vec<(PairPacking, Option<Vec<RainbowPath>>)> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let (size, cands, packing) = pair_packing(coloring, u, v, k);
            let witness = collect_witnesses.then(|| {
                packing
                    .rainbow_paths(&cands, coloring)
                    .expect("candidates are rainbow")
            });
            (
                PairPacking {
                    u,
                    v,
                    packing: size,
                },
                witness,
            )
        })
        .collect();
    let min_packing = results.iter().map(|(p, _)| p.packing).min().unwrap_or(k);
    let (per_pair, witnesses): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(VerificationReport {
        k,
        per_pair,
        min_packing,
        ok: min_packing >= k,
        witnesses: if collect_witnesses {
            Some(witnesses.into_iter().map(Option::unwrap).collect())
        } else {
            None
        },
    })
}

/// Sequential pass/fail check that stops at the first pair short of `k` paths.
/// Same-side pairs go first: they have the fewest candidates and fail most often.
pub fn passes(coloring: &EdgeColoring, k: usize) -> Result<bool> {
    check_k(coloring, k)?;
    let mut pairs = vertex_pairs(coloring.r());
    pairs.sort_by_key(|&(u, v)| u.side != v.side);
    Ok(pairs
        .into_iter()
        .all(|(u, v)| pair_packing(coloring, u, v, k).0 >= k))
}

/// Independently checks a claimed set of `u-v` paths: each is a simple
/// alternating path from `u` to `v` whose edges, recolored from `coloring`,
/// are pairwise distinct; the paths share no internal vertex; and there are at
/// least `k` of them.
pub fn check_witness_set(
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    paths: &[RainbowPath],
    k: usize,
) -> std::result::Result<(), String> {
    let r = coloring.r();
    if paths.len() < k {
        return Err(format!("{} paths, {k} required", paths.len()));
    }
    let mut claimed = vec![false; 2 * r];
    for (idx, p) in paths.iter().enumerate() {
        let vs = p.vertices();
        if vs.first() != Some(&u) || vs.last() != Some(&v) {
            return Err(format!("path {idx} does not join {u} and {v}"));
        }
        let mut on_path = vec![false; 2 * r];
        let mut seen_colors = Vec::new();
        for (t, pair) in vs.windows(2).enumerate() {
            let c = coloring
                .color_between(pair[0], pair[1])
                .ok_or_else(|| format!("path {idx} has non-edge {}-{}", pair[0], pair[1]))?;
            if p.colors().get(t) != Some(&c) {
                return Err(format!("path {idx} records a wrong color at edge {t}"));
            }
            if seen_colors.contains(&c) {
                return Err(format!("path {idx} repeats color {c}"));
            }
            seen_colors.push(c);
        }
        for x in vs {
            if x.flat >= r || std::mem::replace(&mut on_path[x.id(r)], true) {
                return Err(format!("path {idx} is not simple at {x}"));
            }
        }
        for x in &vs[1..vs.len() - 1] {
            if std::mem::replace(&mut claimed[x.id(r)], true) {
                return Err(format!("internal vertex {x} is shared"));
            }
        }
    }
    Ok(())
}
