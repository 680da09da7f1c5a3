//! Exhaustive reference implementations shared by the integration tests.

use rainbow_bipartite::graph::{EdgeColoring, Vertex};

/// Every simple rainbow path, by plain DFS.
pub fn brute_paths(c: &EdgeColoring, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    fn go(
        c: &EdgeColoring,
        v: Vertex,
        path: &mut Vec<Vertex>,
        used: &mut Vec<u8>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let x = *path.last().unwrap();
        if x == v {
            out.push(path.clone());
            return;
        }
        for id in 0..2 * c.r() {
            let y = Vertex::from_id(id, c.r());
            if y.side == x.side || path.contains(&y) {
                continue;
            }
            let col = c.color_between(x, y).unwrap();
            if used.contains(&col) {
                continue;
            }
            path.push(y);
            used.push(col);
            go(c, v, path, used, out);
            used.pop();
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(c, v, &mut vec![u], &mut Vec::new(), &mut out);
    out
}

/// Largest family of paths with pairwise disjoint interiors, by include/exclude.
pub fn brute_max(paths: &[Vec<Vertex>], r: usize) -> usize {
    fn go(paths: &[Vec<Vertex>], i: usize, taken: &mut Vec<bool>, r: usize) -> usize {
        if i == paths.len() {
            return 0;
        }
        let skip = go(paths, i + 1, taken, r);
        let inner = &paths[i][1..paths[i].len() - 1];
        if inner.iter().any(|x| taken[x.id(r)]) {
            return skip;
        }
        for x in inner {
            taken[x.id(r)] = true;
        }
        let with = 1 + go(paths, i + 1, taken, r);
        for x in inner {
            taken[x.id(r)] = false;
        }
        skip.max(with)
    }
    go(paths, 0, &mut vec![false; 2 * r], r)
}
