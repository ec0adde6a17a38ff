//! Oriented and harmonious colourings: checkers, greedy heuristics and exact
//! backtracking solvers.

mod harmonious;
mod oriented;

pub use harmonious::{harmonious_exact, harmonious_greedy, is_harmonious, HARMONIOUS_EXACT_LIMIT};
pub use oriented::{
    conflict_partners, diameter_two_core, is_oriented_colouring, ochi_exact, ochi_graph_exact,
    ochi_heuristic, ochi_heuristic_order,
};

use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex colouring with colours `0..k`, every colour used at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Colouring {
    assignment: Vec<usize>,
    k: usize,
}

impl Colouring {
    /// Fails if some colour below the maximum is unused.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; k];
        for &c in &assignment {
            used[c] = true;
        }
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidParameter(format!(
                "colour {gap} is unused but colour {} appears",
                k - 1
            )));
        }
        Ok(Colouring { assignment, k })
    }

    /// Renumbers arbitrary colour labels `0, 1, 2, ...` in order of first appearance.
    pub fn normalized(raw: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let assignment = raw
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Colouring {
            assignment,
            k: map.len(),
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn num_colours(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// The colouring of a relabelled graph where vertex `v` became `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut assignment = vec![0; self.assignment.len()];
        for (v, &c) in self.assignment.iter().enumerate() {
            assignment[perm[v]] = c;
        }
        Colouring { assignment, k: self.k }
    }

    fn check_domain(&self, n: usize) -> Result<()> {
        if self.assignment.len() != n {
            return Err(Error::ColouringDomain {
                expected: n,
                got: self.assignment.len(),
            });
        }
        Ok(())
    }
}

/// Search limits. The node count is the portable unit; the time limit is advisory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Colour assignments tried.
    pub nodes: u64,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

/// Outcome of a colouring search.
///
/// When `completed`, `value` is exact and `lower == value`. Otherwise `value`
/// is the best witnessed upper bound and `lower` a certified lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub value: usize,
    pub lower: usize,
    pub completed: bool,
    pub witness: Colouring,
    /// For graph-level results, the mask of the orientation attaining `value`.
    pub orientation: Option<u64>,
    pub stats: SearchStats,
}

/// Node and clock accounting shared by the backtracking solvers.
pub(crate) struct Meter {
    budget: Budget,
    nodes: u64,
    start: web_time::Instant,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            budget,
            nodes: 0,
            start: web_time::Instant::now(),
        }
    }

    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return false;
        }
        match self.budget.max_time {
            Some(limit) if self.nodes.is_multiple_of(4096) => self.start.elapsed() <= limit,
            _ => true,
        }
    }

    pub(crate) fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes.min(self.budget.max_nodes),
            elapsed: self.start.elapsed(),
        }
    }
}

/// Result of one fixed-`k` feasibility search.
pub(crate) enum Feasibility {
    Found(Vec<usize>),
    Infeasible,
    Exhausted,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colouring_validation() {
        assert!(Colouring::new(vec![0, 2]).is_err());
        let c = Colouring::new(vec![1, 0, 1]).unwrap();
        assert_eq!(c.num_colours(), 2);
        assert_eq!(Colouring::normalized(&[7, 3, 7, 9]).assignment(), &[0, 1, 0, 2]);
        assert_eq!(Colouring::new(vec![]).unwrap().num_colours(), 0);
    }

    #[test]
    fn meter_stops_at_budget() {
        let mut m = Meter::new(Budget::nodes(3));
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert_eq!(m.stats().nodes, 3);
    }
}
