use super::{OrientedGraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Default cap on `m` for exhaustive orientation enumeration.
pub const ORIENTATION_LIMIT: usize = 24;

/// Orients `g` by `mask` over its [`EdgeOrder`](super::EdgeOrder): bit `i` false
/// directs edge `i` from its smaller to its larger endpoint, true reverses it.
pub fn orient(g: &UndirectedGraph, mask: &[bool]) -> Result<OrientedGraph> {
    if mask.len() != g.m() {
        return Err(Error::MaskLength {
            expected: g.m(),
            got: mask.len(),
        });
    }
    let arcs = g
        .edges()
        .iter()
        .zip(mask)
        .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
        .collect::<Vec<_>>();
    Ok(from_arcs(g.n(), arcs))
}

/// [`orient`] with the mask packed into an integer, bit `i` for edge `i`.
pub fn orient_bits(g: &UndirectedGraph, mask: u64) -> Result<OrientedGraph> {
    if g.m() > 64 || (g.m() < 64 && mask >> g.m() != 0) {
        return Err(Error::InvalidParameter(format!(
            "mask {mask:#x} does not fit {} edges",
            g.m()
        )));
    }
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
        .collect();
    Ok(from_arcs(g.n(), arcs))
}

fn from_arcs(n: usize, mut arcs: Vec<(usize, usize)>) -> OrientedGraph {
    arcs.sort_unstable();
    OrientedGraph::from_sorted(n, arcs)
}

/// All `2^m` orientations of a graph, in increasing mask order.
pub struct Orientations<'a> {
    graph: &'a UndirectedGraph,
    next: u64,
    end: u64,
}

impl Orientations<'_> {
    /// Total number of orientations, `2^m`.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for Orientations<'_> {
    type Item = (u64, OrientedGraph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some((mask, orient_bits(self.graph, mask).expect("mask within range")))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_orientations(g: &UndirectedGraph) -> Result<Orientations<'_>> {
    enumerate_orientations_with_limit(g, ORIENTATION_LIMIT)
}

pub fn enumerate_orientations_with_limit(g: &UndirectedGraph, limit: usize) -> Result<Orientations<'_>> {
    if g.m() > limit.min(62) {
        return Err(Error::TooManyOrientations { m: g.m(), limit });
    }
    Ok(Orientations {
        graph: g,
        next: 0,
        end: 1u64 << g.m(),
    })
}

/// Orients each edge, in edge order, by one [`SeededRng::coin`] flip.
pub fn random_orientation(g: &UndirectedGraph, seed: u64) -> OrientedGraph {
    orient(g, &random_orientation_mask(g, seed)).expect("mask length equals m")
}

pub fn random_orientation_mask(g: &UndirectedGraph, seed: u64) -> Vec<bool> {
    let mut rng = SeededRng::new(seed);
    (0..g.m()).map(|_| rng.coin()).collect()
}
