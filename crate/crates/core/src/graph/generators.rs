use std::fmt;
use std::str::FromStr;

use super::{OrientedGraph, UndirectedGraph};
use crate::error::{Error, Result};

pub const HYPERCUBE_MAX_DIM: u32 = 20;

/// The hypercube `Q_d`. Vertex `v` is the 0/1 vector whose bits are the binary
/// digits of `v`; neighbours differ in exactly one bit.
pub fn gen_hypercube(d: u32) -> Result<UndirectedGraph> {
    if !(1..=HYPERCUBE_MAX_DIM).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in 1..={HYPERCUBE_MAX_DIM}, got {d}"
        )));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(d as usize * (n / 2));
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    Ok(UndirectedGraph::from_sorted(n, edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n-1}` with centre 0.
    Star,
}

impl FromStr for BasicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(BasicKind::Path),
            "cycle" => Ok(BasicKind::Cycle),
            "complete" => Ok(BasicKind::Complete),
            "star" => Ok(BasicKind::Star),
            other => Err(Error::InvalidParameter(format!("unknown graph kind '{other}'"))),
        }
    }
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicKind::Path => "path",
            BasicKind::Cycle => "cycle",
            BasicKind::Complete => "complete",
            BasicKind::Star => "star",
        })
    }
}

pub fn gen_basic(kind: BasicKind, n: usize) -> Result<UndirectedGraph> {
    let min = if kind == BasicKind::Cycle { 3 } else { 1 };
    if n < min {
        return Err(Error::InvalidParameter(format!("{kind} needs n >= {min}, got {n}")));
    }
    let edges: Vec<(usize, usize)> = match kind {
        BasicKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        BasicKind::Cycle => (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect(),
        BasicKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        BasicKind::Star => (1..n).map(|v| (0, v)).collect(),
    };
    UndirectedGraph::new(n, &edges)
}

/// The orientation of `K_{1,1,n}` with apexes `a = 0`, `b = 1` and independent
/// vertices `2..n+2`: arcs `a -> v`, `v -> b` for every independent `v`, and `b -> a`.
/// Its pair-diameter is 3 and its oriented chromatic number is 3.
pub fn gen_k11n_oriented(n: usize) -> Result<OrientedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("K_(1,1,n) needs n >= 2, got {n}")));
    }
    let mut arcs = vec![(1, 0)];
    for v in 2..n + 2 {
        arcs.push((0, v));
        arcs.push((v, 1));
    }
    OrientedGraph::new(n + 2, &arcs)
}
