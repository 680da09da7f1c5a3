use crate::error::{Error, Result};
use crate::graph::{ColorSet, EdgeColoring, Vertex};

/// All simple rainbow `u-v` paths up to some length, bucketed by the number
/// of internal vertices.
///
/// In a complete bipartite host a pair on the same side only has paths of
/// even length and a pair on opposite sides only paths of odd length, so at
/// most one of `one_internal` and `two_internal` is ever nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCandidateSet {
    pub r: usize,
    pub u: Vertex,
    pub v: Vertex,
    /// The edge `u-v`, which exists iff the endpoints are on opposite sides.
    pub direct: bool,
    /// Middle vertex `a` of each rainbow path `u, a, v`.
    pub one_internal: Vec<Vertex>,
    /// `(a, b)` of each rainbow path `u, a, b, v`; `a` is adjacent to `u`.
    pub two_internal: Vec<(Vertex, Vertex)>,
    /// Internal sequences of rainbow paths with three or more internal vertices.
    pub longer: Vec<Vec<Vertex>>,
}

impl PathCandidateSet {
    pub fn new(r: usize, u: Vertex, v: Vertex) -> Self {
        PathCandidateSet {
            r,
            u,
            v,
            direct: false,
            one_internal: Vec::new(),
            two_internal: Vec::new(),
            longer: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        usize::from(self.direct)
            + self.one_internal.len()
            + self.two_internal.len()
            + self.longer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Full vertex sequence of every candidate, in bucket order.
    pub fn paths(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::with_capacity(self.len());
        if self.direct {
            out.push(vec![self.u, self.v]);
        }
        out.extend(self.one_internal.iter().map(|&a| vec![self.u, a, self.v]));
        out.extend(
            self.two_internal
                .iter()
                .map(|&(a, b)| vec![self.u, a, b, self.v]),
        );
        out.extend(self.longer.iter().map(|mid| {
            let mut p = Vec::with_capacity(mid.len() + 2);
            p.push(self.u);
            p.extend_from_slice(mid);
            p.push(self.v);
            p
        }));
        out
    }

    /// Distinct internal vertices over `one_internal` and `two_internal`.
    pub fn short_internal_vertices(&self) -> usize {
        let mut seen = vec![false; 2 * self.r];
        for &a in &self.one_internal {
            seen[a.id(self.r)] = true;
        }
        for &(a, b) in &self.two_internal {
            seen[a.id(self.r)] = true;
            seen[b.id(self.r)] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

/// Enumerates every simple rainbow `u-v` path with at most `max_len` edges.
///
/// `max_len` defaults to the number of colors, the longest a rainbow path can be.
pub fn enumerate_rainbow_paths(
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    max_len: Option<usize>,
) -> Result<PathCandidateSet> {
    let r = coloring.r();
    if u.flat >= r || v.flat >= r {
        return Err(Error::Parameter(format!(
            "pair {u}, {v} outside K_{{{r},{r}}}"
        )));
    }
    if u == v {
        return Err(Error::Parameter(format!("pair endpoints coincide at {u}")));
    }
    let max_len = max_len
        .unwrap_or(coloring.colors())
        .min(coloring.colors())
        .min(2 * r - 1);
    let mut out = PathCandidateSet::new(r, u, v);
    if u.side != v.side && max_len >= 1 {
        out.direct = true;
    }
    if max_len >= 4 {
        let mut search = Dfs {
            coloring,
            v,
            max_len,
            on_path: vec![false; 2 * r],
            used: ColorSet::new(),
            stack: Vec::new(),
            out: &mut out,
        };
        search.on_path[u.id(r)] = true;
        search.extend(u);
        return Ok(out);
    }
    // Up to three edges the two buckets can be filled with plain loops.
    if u.side == v.side {
        if max_len >= 2 {
            for a in (0..r).map(|flat| Vertex {
                side: u.side.other(),
                flat,
            }) {
                let c1 = coloring.color_between(u, a).unwrap();
                let c2 = coloring.color_between(a, v).unwrap();
                if c1 != c2 {
                    out.one_internal.push(a);
                }
            }
        }
    } else if max_len >= 3 {
        for a in (0..r).map(|flat| Vertex { side: v.side, flat }) {
            if a == v {
                continue;
            }
            let c1 = coloring.color_between(u, a).unwrap();
            for b in (0..r).map(|flat| Vertex { side: u.side, flat }) {
                if b == u {
                    continue;
                }
                let c2 = coloring.color_between(a, b).unwrap();
                if c2 == c1 {
                    continue;
                }
                let c3 = coloring.color_between(b, v).unwrap();
                if c3 != c1 && c3 != c2 {
                    out.two_internal.push((a, b));
                }
            }
        }
    }
    Ok(out)
}

struct Dfs<'a> {
    coloring: &'a EdgeColoring,
    v: Vertex,
    max_len: usize,
    on_path: Vec<bool>,
    used: ColorSet,
    stack: Vec<Vertex>,
    out: &'a mut PathCandidateSet,
}

impl Dfs<'_> {
    /// `x` is the current end of the partial path (edges so far = `stack.len()`).
    fn extend(&mut self, x: Vertex) {
        let r = self.coloring.r();
        let edges = self.stack.len();
        if x.side != self.v.side {
            let c = self.coloring.color_between(x, self.v).unwrap();
            if !self.used.contains(c) {
                match self.stack.len() {
                    0 => {} // the direct edge is recorded by the caller
                    1 => self.out.one_internal.push(self.stack[0]),
                    2 => self.out.two_internal.push((self.stack[0], self.stack[1])),
                    _ => self.out.longer.push(self.stack.clone()),
                }
            }
        }
        // A detour through y needs two more edges at least.
        if edges + 2 > self.max_len {
            return;
        }
        let side = x.side.other();
        for y in (0..r).map(|flat| Vertex { side, flat }) {
            if y == self.v || self.on_path[y.id(r)] {
                continue;
            }
            // Parity: from y the remaining length to v must be reachable.
            let remaining = if y.side == self.v.side { 2 } else { 1 };
            if edges + 1 + remaining > self.max_len {
                continue;
            }
            let c = self.coloring.color_between(x, y).unwrap();
            if !self.used.insert(c) {
                continue;
            }
            self.on_path[y.id(r)] = true;
            self.stack.push(y);
            self.extend(y);
            self.stack.pop();
            self.on_path[y.id(r)] = false;
            self.used.remove(c);
        }
    }
}
