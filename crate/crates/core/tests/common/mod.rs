//! Independent oracles shared by the integration suites. Nothing here calls the
//! solver or diameter code it is used to check.
#![allow(dead_code)]

use ochromatic::graph::{gen_basic, gen_hypercube, BasicKind, OrientedGraph, UndirectedGraph};
use ochromatic::rng::SeededRng;

/// Forbidden-pattern check straight from the definition: proper, and no arcs
/// `v -> w`, `x -> y` with `c(v) = c(y)` and `c(w) = c(x)`.
pub fn oriented_valid(d: &OrientedGraph, c: &[usize]) -> bool {
    let arcs = d.arcs();
    arcs.iter().all(|&(v, w)| c[v] != c[w])
        && arcs
            .iter()
            .all(|&(v, w)| arcs.iter().all(|&(x, y)| !(c[v] == c[y] && c[w] == c[x])))
}

pub fn harmonious_valid(g: &UndirectedGraph, c: &[usize]) -> bool {
    let e = g.edges();
    e.iter().all(|&(u, v)| c[u] != c[v])
        && e.iter().enumerate().all(|(i, &(a, b))| {
            e[i + 1..].iter().all(|&(x, y)| {
                let p = (c[a].min(c[b]), c[a].max(c[b]));
                let q = (c[x].min(c[y]), c[x].max(c[y]));
                p != q
            })
        })
}

/// Minimum number of blocks over all set partitions of the vertices
/// (restricted growth strings) accepted by `valid`.
pub fn min_partition(n: usize, valid: &dyn Fn(&[usize]) -> bool) -> usize {
    fn rec(n: usize, c: &mut Vec<usize>, used: usize, best: &mut usize, valid: &dyn Fn(&[usize]) -> bool) {
        if used >= *best {
            return;
        }
        if c.len() == n {
            if valid(c) {
                *best = used;
            }
            return;
        }
        for colour in 0..=used {
            c.push(colour);
            rec(n, c, used.max(colour + 1), best, valid);
            c.pop();
        }
    }
    let mut best = n + 1;
    rec(n, &mut Vec::new(), 0, &mut best, valid);
    best
}

pub fn brute_ochi(d: &OrientedGraph) -> usize {
    min_partition(d.n(), &|c| oriented_valid(d, c))
}

pub fn brute_harmonious(g: &UndirectedGraph) -> usize {
    min_partition(g.n(), &|c| harmonious_valid(g, c))
}

/// Pair-diameter by Floyd-Warshall; `None` is infinite.
#[allow(clippy::needless_range_loop)]
pub fn floyd_pair_diameter(d: &OrientedGraph) -> Option<usize> {
    let n = d.n();
    let inf = usize::MAX / 4;
    let mut w = vec![vec![inf; n]; n];
    for (v, row) in w.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in d.arcs() {
        w[u][v] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                w[i][j] = w[i][j].min(w[i][k] + w[k][j]);
            }
        }
    }
    let mut worst = Some(0);
    for u in 0..n {
        for v in u + 1..n {
            let m = w[u][v].min(w[v][u]);
            worst = match (worst, m >= inf) {
                (_, true) | (None, _) => None,
                (Some(a), false) => Some(a.max(m)),
            };
        }
    }
    worst
}

pub fn ksz_scan(n: usize, m: usize) -> usize {
    (1usize..)
        .find(|&k| (k * (k - 1) / 2) as f64 + n as f64 * (k as f64).log2() >= m as f64)
        .unwrap()
}

/// Root of `t + log2 t = rhs` by fixed-count bisection on a wide bracket.
pub fn t_oracle(rhs: f64) -> f64 {
    let (mut lo, mut hi) = (1e-300_f64, 1e9_f64);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid + mid.log2() < rhs {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// P2–P5, C3–C6, K_{1,3}, K4, Q_2.
pub fn corpus() -> Vec<(String, UndirectedGraph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("P{n}"), gen_basic(BasicKind::Path, n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("C{n}"), gen_basic(BasicKind::Cycle, n).unwrap()));
    }
    out.push(("K1,3".into(), gen_basic(BasicKind::Star, 4).unwrap()));
    out.push(("K4".into(), gen_basic(BasicKind::Complete, 4).unwrap()));
    out.push(("Q2".into(), gen_hypercube(2).unwrap()));
    out
}

/// Random oriented graph: each pair absent, forward or backward with equal odds.
pub fn random_oriented(n: usize, rng: &mut SeededRng) -> OrientedGraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.below(3) {
                0 => arcs.push((u, v)),
                1 => arcs.push((v, u)),
                _ => {}
            }
        }
    }
    OrientedGraph::new(n, &arcs).unwrap()
}
