//! Pair-diameter of oriented graphs and ocliques.
//!
//! The distance between two vertices of an oriented graph is the length of the
//! shorter of the two directed shortest paths between them (either direction
//! counts). The pair-diameter is the largest such distance over unordered
//! pairs, and an oclique is an oriented graph of pair-diameter at most 2.
//! Ocliques are exactly the oriented graphs whose every oriented colouring is
//! injective.

mod lemma2;

pub use lemma2::{lemma2_digraph, verify_lemma2, Clause, Lemma2Params, Lemma2Report};

use serde::Serialize;

use crate::graph::{OrientedGraph, UndirectedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Diameter {
    Finite(usize),
    /// Some pair has no directed path in either direction.
    Infinite,
}

impl Diameter {
    pub fn is_at_most(self, k: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= k)
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub value: Diameter,
    /// Lexicographically first pair `(u, v)`, `u < v`, attaining `value`.
    pub witness: Option<(usize, usize)>,
}

/// All-pairs directed distances, `dist[u][v]` from `u` to `v`.
pub fn distance_matrix(d: &OrientedGraph) -> Vec<Vec<Option<usize>>> {
    (0..d.n()).map(|s| d.bfs(s)).collect()
}

#[allow(clippy::needless_range_loop)]
pub fn pair_diameter(d: &OrientedGraph) -> DiameterReport {
    let dist = distance_matrix(d);
    let mut best = DiameterReport {
        value: Diameter::Finite(0),
        witness: None,
    };
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            let pair = match (dist[u][v], dist[v][u]) {
                (None, None) => Diameter::Infinite,
                (Some(a), None) | (None, Some(a)) => Diameter::Finite(a),
                (Some(a), Some(b)) => Diameter::Finite(a.min(b)),
            };
            if best.witness.is_none() || pair > best.value {
                best = DiameterReport {
                    value: pair,
                    witness: Some((u, v)),
                };
            }
        }
    }
    best
}

pub fn is_oclique(d: &OrientedGraph) -> bool {
    pair_diameter(d).value.is_at_most(2)
}

/// Undirected diameter; `Infinite` for disconnected graphs.
pub fn undirected_diameter(g: &UndirectedGraph) -> Diameter {
    let mut worst = 0;
    for s in 0..g.n() {
        for d in g.bfs(s) {
            match d {
                Some(d) => worst = worst.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(worst)
}

/// Moore-bound cross-check: an undirected graph of diameter at most 2 has
/// `Δ ≥ √(n − 1)`. Graphs of larger diameter pass vacuously, so a `false`
/// return means the graph code is broken.
pub fn moore_check(g: &UndirectedGraph) -> bool {
    if !undirected_diameter(g).is_at_most(2) {
        return true;
    }
    let delta = g.max_degree();
    delta * delta + 1 >= g.n()
}
