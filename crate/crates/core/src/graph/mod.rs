//! Undirected graphs and oriented graphs on vertices `0..n`.

mod generators;
pub mod io;
mod orientation;

pub use generators::{gen_basic, gen_hypercube, gen_k11n_oriented, BasicKind, HYPERCUBE_MAX_DIM};
pub use orientation::{
    enumerate_orientations, enumerate_orientations_with_limit, orient, orient_bits,
    random_orientation, random_orientation_mask, Orientations, ORIENTATION_LIMIT,
};

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A simple undirected graph. Edges are stored as `(min, max)` pairs in
/// lexicographic order, which is also the [`EdgeOrder`] used by orientation masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Validates and builds a graph. Edge endpoints may be given in either order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { endpoint: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(u, v));
            }
            canon.push(e);
        }
        canon.sort_unstable();
        Ok(Self::from_sorted(n, canon))
    }

    /// `edges` must already be canonical, sorted and duplicate-free.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        UndirectedGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Average degree `2m / n`.
    pub fn avg_degree(&self) -> f64 {
        2.0 * self.m() as f64 / self.n as f64
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.max_degree();
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn edge_order(&self) -> EdgeOrder {
        EdgeOrder(self.edges.clone())
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        bfs(&self.adj, source)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        UndirectedGraph::new(self.n, &edges).expect("relabelling preserves validity")
    }
}

/// Canonical edge list of an undirected graph: lexicographic in
/// `(min endpoint, max endpoint)`. Bit `i` of an orientation mask refers to
/// `self.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder(Vec<(usize, usize)>);

impl EdgeOrder {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        self.0.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

/// A digraph with no loops and at most one arc between any two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl OrientedGraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { endpoint: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if seen.contains(&(v, u)) {
                return Err(Error::AntiparallelArcs(v, u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        Ok(Self::from_sorted(n, sorted))
    }

    pub(crate) fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inc[v].push(u);
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        OrientedGraph { n, arcs, out, inc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// The underlying undirected graph.
    pub fn underlying(&self) -> UndirectedGraph {
        let mut edges: Vec<_> = self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        UndirectedGraph::from_sorted(self.n, edges)
    }

    /// Directed breadth-first distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        bfs(&self.out, source)
    }

    /// The same digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        OrientedGraph::new(self.n, &arcs).expect("relabelling preserves validity")
    }
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
