//! Exact `rc_k` of small `K_{r,r}` by exhaustive search over edge colorings.
//!
//! Rainbowness only depends on which edges share a color, not on the color
//! names, so it is enough to visit one coloring per set partition of the edge
//! set. Partitions are enumerated as restricted-growth strings over the edges
//! in lexicographic `(u, w)` order: `s[0] = 0` and
//! `s[t] <= 1 + max(s[0..t])`. A string with `b` distinct values is the
//! coloring with `b` colors where edge `t` gets color `s[t] + 1`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring};
use crate::verifier::passes;

/// Largest number of canonical colorings one search may visit without `force`.
///
/// All of `K_{2,2}` and `K_{3,3}` fit; `K_{4,4}` fits up to two colors
/// (32 768 strings) while three colors need 7 141 686.
pub const MAX_CANONICAL_COLORINGS: u128 = 5_000_000;

/// Side sizes the oracle accepts at all.
pub const DESK_SCALE_R: std::ops::RangeInclusive<usize> = 2..=4;

/// Length of the fixed prefixes used to split the search across workers.
pub const DEFAULT_PREFIX_LEN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip the cost guard.
    pub force: bool,
    pub prefix_len: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            force: false,
            prefix_len: DEFAULT_PREFIX_LEN,
        }
    }
}

/// Stirling number of the second kind `S(n, b)`, saturating.
pub fn stirling2(n: usize, b: usize) -> u128 {
    let mut row = vec![0u128; b + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=b.min(i)).rev() {
            row[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[b]
}

/// Number of restricted-growth strings of length `n` with at most `cap` values.
pub fn canonical_count(n: usize, cap: usize) -> u128 {
    (1..=cap).fold(0u128, |acc, b| acc.saturating_add(stirling2(n, b)))
}

fn guard(estimate: u128, force: bool) -> Result<()> {
    if !force && estimate > MAX_CANONICAL_COLORINGS {
        return Err(Error::CostGuard {
            estimate,
            limit: MAX_CANONICAL_COLORINGS,
        });
    }
    Ok(())
}

/// Lexicographic walk over restricted-growth strings with a frozen prefix.
#[derive(Clone, Debug)]
pub struct CanonicalColoringCursor {
    cap: usize,
    frozen: usize,
    rgs: Vec<u8>,
    // running maxima: prefix_max[t] = max(rgs[0..=t])
    prefix_max: Vec<u8>,
    started: bool,
    done: bool,
}

impl CanonicalColoringCursor {
    /// All strings of length `n` with at most `cap` distinct values.
    pub fn new(n: usize, cap: usize) -> Self {
        Self::with_prefix(n, cap, &[]).expect("empty prefix is always valid")
    }

    /// Strings of length `n` starting with `prefix`, which must itself be a
    /// valid restricted-growth string under `cap`.
    pub fn with_prefix(n: usize, cap: usize, prefix: &[u8]) -> Result<Self> {
        if n == 0 || cap == 0 || cap > usize::from(Color::MAX) {
            return Err(Error::Parameter(format!(
                "no colorings of {n} edges with {cap} colors"
            )));
        }
        if prefix.len() > n || !is_rgs(prefix, cap) {
            return Err(Error::Parameter(format!(
                "{prefix:?} is not a restricted-growth prefix"
            )));
        }
        let mut rgs = prefix.to_vec();
        rgs.resize(n, 0);
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0;
        for &x in &rgs {
            m = m.max(x);
            prefix_max.push(m);
        }
        Ok(CanonicalColoringCursor {
            cap,
            frozen: prefix.len().max(1),
            rgs,
            prefix_max,
            started: false,
            done: false,
        })
    }

    pub fn current(&self) -> &[u8] {
        &self.rgs
    }

    /// Number of distinct values in the current string.
    pub fn blocks(&self) -> usize {
        usize::from(*self.prefix_max.last().unwrap()) + 1
    }

    /// Advances to the next string; false once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.rgs.len();
        let top = (self.cap - 1) as u8;
        for t in (self.frozen..n).rev() {
            let limit = top.min(self.prefix_max[t - 1] + 1);
            if self.rgs[t] < limit {
                self.rgs[t] += 1;
                self.prefix_max[t] = self.prefix_max[t - 1].max(self.rgs[t]);
                let m = self.prefix_max[t];
                for s in t + 1..n {
                    self.rgs[s] = 0;
                    self.prefix_max[s] = m;
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn coloring(&self, r: usize) -> EdgeColoring {
        EdgeColoring::new(r, self.blocks(), self.rgs.iter().map(|&x| x + 1).collect())
            .expect("restricted-growth string is a valid coloring")
    }
}

fn is_rgs(s: &[u8], cap: usize) -> bool {
    let mut next = 0usize;
    for &x in s {
        let x = usize::from(x);
        if x > next || x >= cap {
            return false;
        }
        next = next.max(x + 1);
    }
    true
}

/// All valid restricted-growth prefixes of length `p` (or `n` if shorter).
fn prefixes(n: usize, cap: usize, p: usize) -> Vec<Vec<u8>> {
    let len = p.clamp(1, n);
    let mut cursor = CanonicalColoringCursor::new(len, cap);
    let mut out = Vec::new();
    while cursor.advance() {
        out.push(cursor.current().to_vec());
    }
    out
}

/// Iterator over one canonical coloring per color-permutation class.
pub struct CanonicalColorings {
    r: usize,
    cursor: CanonicalColoringCursor,
}

impl Iterator for CanonicalColorings {
    type Item = EdgeColoring;

    fn next(&mut self) -> Option<EdgeColoring> {
        self.cursor.advance().then(|| self.cursor.coloring(self.r))
    }
}

/// Every coloring of `K_{r,r}` with at most `block_cap` colors, up to renaming colors.
pub fn enumerate_canonical(r: usize, block_cap: usize, force: bool) -> Result<CanonicalColorings> {
    if r == 0 || block_cap == 0 {
        return Err(Error::Parameter("r and block_cap must be positive".into()));
    }
    guard(canonical_count(r * r, block_cap), force)?;
    Ok(CanonicalColorings {
        r,
        cursor: CanonicalColoringCursor::new(r * r, block_cap),
    })
}

fn check_desk_scale(r: usize, k: usize, force: bool) -> Result<()> {
    if !DESK_SCALE_R.contains(&r) && !force {
        return Err(Error::CostGuard {
            estimate: canonical_count(r * r, 3),
            limit: MAX_CANONICAL_COLORINGS,
        });
    }
    if r == 0 {
        return Err(Error::Parameter("r must be positive".into()));
    }
    if k == 0 || k > r {
        return Err(Error::Parameter(format!("k = {k} outside 1..={r}")));
    }
    Ok(())
}

/// Smallest `j <= max_colors` such that some `j`-coloring of `K_{r,r}` joins
/// every pair by `k` internally disjoint rainbow paths.
///
/// Each `j` visits only strings with exactly `j` blocks, since fewer blocks
/// were covered by earlier rounds.
pub fn rc_k_bruteforce(
    r: usize,
    k: usize,
    max_colors: usize,
    opts: SearchOptions,
) -> Result<usize> {
    check_desk_scale(r, k, opts.force)?;
    let n = r * r;
    for j in 1..=max_colors.min(n) {
        guard(stirling2(n, j), opts.force)?;
        let found = prefixes(n, j, opts.prefix_len)
            .into_par_iter()
            .any(|prefix| {
                let mut cursor = CanonicalColoringCursor::with_prefix(n, j, &prefix).unwrap();
                while cursor.advance() {
                    if cursor.blocks() == j && passes(&cursor.coloring(r), k).unwrap() {
                        return true;
                    }
                }
                false
            });
        if found {
            return Ok(j);
        }
    }
    Err(Error::CapExceeded { max_colors })
}

/// Number of canonical colorings with at most `j` colors that pass the
/// `k`-connectivity check.
pub fn count_valid_colorings(r: usize, k: usize, j: usize, opts: SearchOptions) -> Result<u64> {
    check_desk_scale(r, k, opts.force)?;
    let n = r * r;
    if j == 0 {
        return Ok(0);
    }
    guard(canonical_count(n, j), opts.force)?;
    Ok(prefixes(n, j, opts.prefix_len)
        .into_par_iter()
        .map(|prefix| {
            let mut cursor = CanonicalColoringCursor::with_prefix(n, j, &prefix).unwrap();
            let mut count = 0u64;
            while cursor.advance() {
                if passes(&cursor.coloring(r), k).unwrap() {
                    count += 1;
                }
            }
            count
        })
        .sum())
}
