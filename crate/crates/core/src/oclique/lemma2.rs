//! A family of regular ocliques with degree `√(8n+1) − 3`.
//!
//! For `p ≥ 3` the vertices are the pairs `(i, j)` with `1 ≤ i < j ≤ p`, and the
//! arcs are
//!
//! * `(i,j) -> (i,k)` for `i < j < k`,
//! * `(i,j) -> (k,j)` for `i < k < j`,
//! * `(i,j) -> (k,i)` for `k < i < j`.
//!
//! Every vertex has in- and out-degree `p − 2`, the digraph has pair-diameter 2,
//! and so its oriented chromatic number is `n = p(p−1)/2` although
//! `Δ = 2(p − 2)` is only about `√(8n)`.

use serde::Serialize;

use super::{pair_diameter, Diameter};
use crate::chromatic::{ochi_exact, Budget};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma2Params {
    p: usize,
}

impl Lemma2Params {
    pub fn new(p: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidParameter(format!("p must be at least 3, got {p}")));
        }
        Ok(Lemma2Params { p })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.p * (self.p - 1) / 2
    }

    /// Index of label `(i, j)`, `1 ≤ i < j ≤ p`, in lexicographic order.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.p);
        // labels (i', *) with i' < i come first
        (i - 1) * self.p - (i - 1) * i / 2 + (j - i - 1)
    }

    pub fn label(&self, index: usize) -> (usize, usize) {
        let mut rest = index;
        for i in 1..self.p {
            let row = self.p - i;
            if rest < row {
                return (i, i + 1 + rest);
            }
            rest -= row;
        }
        panic!("index {index} out of range for p = {}", self.p)
    }

    pub fn labels(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.p).flat_map(move |i| (i + 1..=self.p).map(move |j| (i, j)))
    }
}

pub fn lemma2_digraph(p: usize) -> Result<OrientedGraph> {
    let params = Lemma2Params::new(p)?;
    let mut arcs = Vec::new();
    for (i, j) in params.labels() {
        let from = params.index(i, j);
        for k in j + 1..=p {
            arcs.push((from, params.index(i, k)));
        }
        for k in i + 1..j {
            arcs.push((from, params.index(k, j)));
        }
        for k in 1..i {
            arcs.push((from, params.index(k, i)));
        }
    }
    // Rejects antiparallel pairs, so success means the rules never produce a 2-cycle.
    OrientedGraph::new(params.n(), &arcs)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma2Report {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub chi: Option<usize>,
    pub clauses: Vec<Clause>,
}

impl Lemma2Report {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

fn isqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Builds the digraph for `p` and checks every claimed property. Failures are
/// reported per clause with a witness rather than returned as errors.
pub fn verify_lemma2(p: usize) -> Result<Lemma2Report> {
    let params = Lemma2Params::new(p)?;
    let mut clauses = Vec::new();

    let d = match lemma2_digraph(p) {
        Ok(d) => {
            clauses.push(Clause {
                name: "oriented",
                passed: true,
                detail: format!("{} arcs, no loops, no antiparallel pairs", d.m()),
            });
            d
        }
        Err(e) => {
            clauses.push(Clause {
                name: "oriented",
                passed: false,
                detail: e.to_string(),
            });
            return Ok(Lemma2Report {
                p,
                n: params.n(),
                m: 0,
                max_degree: 0,
                diameter: Diameter::Infinite,
                chi: None,
                clauses,
            });
        }
    };
    let n = d.n();

    let irregular = (0..n).find(|&v| d.out_degree(v) != p - 2 || d.in_degree(v) != p - 2);
    clauses.push(Clause {
        name: "regularity",
        passed: irregular.is_none(),
        detail: match irregular {
            None => format!("every vertex has in-degree = out-degree = {}", p - 2),
            Some(v) => format!(
                "vertex {:?} has out-degree {}, in-degree {}",
                params.label(v),
                d.out_degree(v),
                d.in_degree(v)
            ),
        },
    });

    let g = d.underlying();
    let delta = g.max_degree();
    let root = isqrt(8 * n + 1);
    let exact_root = root * root == 8 * n + 1;
    let formula_ok = exact_root && root == 2 * p - 1 && delta == 2 * (p - 2) && delta + 3 == root;
    clauses.push(Clause {
        name: "degree",
        passed: formula_ok && g.is_regular(),
        detail: format!(
            "Δ = {delta}, 2(p−2) = {}, √(8n+1) − 3 = {}{}",
            2 * (p - 2),
            root as i64 - 3,
            if exact_root { "" } else { " (8n+1 not a square)" }
        ),
    });

    // For p = 3 the digraph is the directed triangle, a tournament, so every
    // pair is at distance 1; from p = 4 on the disjoint labels sit at distance 2.
    let expected = if p == 3 { 1 } else { 2 };
    let report = pair_diameter(&d);
    clauses.push(Clause {
        name: "diameter",
        passed: report.value == Diameter::Finite(expected),
        detail: match report.witness {
            Some((u, v)) => format!(
                "pair-diameter {} attained at {:?}, {:?}",
                report.value,
                params.label(u),
                params.label(v)
            ),
            None => format!("pair-diameter {}", report.value),
        },
    });

    let solved = ochi_exact(&d, Budget::default());
    let chi = solved.completed.then_some(solved.value);
    clauses.push(Clause {
        name: "chromatic",
        passed: chi == Some(n) && report.value.is_at_most(2),
        detail: match chi {
            Some(k) => format!("exact oriented chromatic number {k}, n = {n}"),
            None => format!("solver exhausted its budget; bounds [{}, {}]", solved.lower, solved.value),
        },
    });

    let rhs = delta as f64 * (n as f64 / 8.0).sqrt();
    clauses.push(Clause {
        name: "tightness",
        passed: (n as f64) > rhs,
        detail: format!("n = {n} > Δ·√(n/8) = {rhs:.4}"),
    });

    Ok(Lemma2Report {
        p,
        n,
        m: d.m(),
        max_degree: delta,
        diameter: report.value,
        chi,
        clauses,
    })
}
