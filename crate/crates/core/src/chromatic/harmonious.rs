use std::collections::HashSet;

use super::{Budget, Colouring, Feasibility, Meter, SearchResult, SearchStats};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::rng::SeededRng;

/// Largest vertex count accepted by [`harmonious_exact`].
pub const HARMONIOUS_EXACT_LIMIT: usize = 12;

const UNSET: usize = usize::MAX;

/// Proper, and no two edges carry the same unordered colour pair.
pub fn is_harmonious(g: &UndirectedGraph, c: &Colouring) -> Result<bool> {
    c.check_domain(g.n())?;
    let mut pairs = HashSet::new();
    for &(u, v) in g.edges() {
        let (a, b) = (c.colour(u), c.colour(v));
        if a == b || !pairs.insert((a.min(b), a.max(b))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices at distance 1 or 2 from `v`.
fn ball2(g: &UndirectedGraph, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &w in g.neighbours(v) {
        out.push(w);
        out.extend(g.neighbours(w).iter().copied().filter(|&x| x != v));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Greedy harmonious colouring along a seeded random order. A vertex takes the
/// least colour unused within distance 2 whose pairs with its coloured
/// neighbours are all still free.
pub fn harmonious_greedy(g: &UndirectedGraph, seed: u64) -> SearchResult {
    let start = web_time::Instant::now();
    let order = SeededRng::new(seed).permutation(g.n());
    let raw = greedy(g, &order);
    let witness = Colouring::normalized(&raw);
    let value = witness.num_colours();
    SearchResult {
        value,
        lower: (g.max_degree() + 1).min(value),
        completed: value == g.max_degree() + 1,
        witness,
        orientation: None,
        stats: SearchStats {
            nodes: g.n() as u64,
            elapsed: start.elapsed(),
        },
    }
}

fn greedy(g: &UndirectedGraph, order: &[usize]) -> Vec<usize> {
    let mut colour = vec![UNSET; g.n()];
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut k = 0;
    for &v in order {
        let near: HashSet<usize> = ball2(g, v)
            .into_iter()
            .filter_map(|u| (colour[u] != UNSET).then_some(colour[u]))
            .collect();
        let coloured_nbrs: Vec<usize> = g
            .neighbours(v)
            .iter()
            .filter_map(|&w| (colour[w] != UNSET).then_some(colour[w]))
            .collect();
        let fits = |c: usize| {
            !near.contains(&c)
                && coloured_nbrs
                    .iter()
                    .all(|&b| !pairs.contains(&(c.min(b), c.max(b))))
        };
        // A fresh colour always fits: neighbours are pairwise within distance 2.
        let c = (0..k).find(|&c| fits(c)).unwrap_or(k);
        k = k.max(c + 1);
        colour[v] = c;
        for b in coloured_nbrs {
            pairs.insert((c.min(b), c.max(b)));
        }
    }
    colour
}

struct HarmoniousSearch<'a> {
    g: &'a UndirectedGraph,
    ball: &'a [Vec<usize>],
    k: usize,
    colour: Vec<usize>,
    class_size: Vec<usize>,
    used: usize,
    pair_used: Vec<bool>,
    seen: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> HarmoniousSearch<'a> {
    fn new(g: &'a UndirectedGraph, ball: &'a [Vec<usize>], k: usize) -> Self {
        HarmoniousSearch {
            g,
            ball,
            k,
            colour: vec![UNSET; g.n()],
            class_size: vec![0; k],
            used: 0,
            pair_used: vec![false; k * k],
            seen: vec![0; g.n() * k],
            saturation: vec![0; g.n()],
        }
    }

    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.colour[v] == UNSET)
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a))
                    .cmp(&(self.saturation[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncoloured vertex remains")
    }

    fn pairs_free(&self, v: usize, c: usize) -> bool {
        self.g
            .neighbours(v)
            .iter()
            .filter(|&&w| self.colour[w] != UNSET)
            .all(|&w| !self.pair_used[c * self.k + self.colour[w]])
    }

    fn set_pairs(&mut self, v: usize, c: usize, value: bool) {
        let k = self.k;
        for &w in self.g.neighbours(v) {
            let b = self.colour[w];
            if b != UNSET {
                self.pair_used[c * k + b] = value;
                self.pair_used[b * k + c] = value;
            }
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.set_pairs(v, c, true);
        self.colour[v] = c;
        self.class_size[c] += 1;
        if self.class_size[c] == 1 {
            self.used += 1;
        }
        let mut wiped = false;
        for &u in &self.ball[v] {
            let slot = &mut self.seen[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
                wiped |= self.colour[u] == UNSET && self.saturation[u] == self.k;
            }
        }
        wiped
    }

    fn unassign(&mut self, v: usize, c: usize) {
        for &u in &self.ball[v] {
            let slot = &mut self.seen[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
        self.colour[v] = UNSET;
        self.set_pairs(v, c, false);
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.used -= 1;
        }
    }

    /// `None` when the budget runs out.
    fn search(&mut self, coloured: usize, meter: &mut Meter) -> Option<bool> {
        if coloured == self.g.n() {
            return Some(true);
        }
        let v = self.pick();
        for c in 0..(self.used + 1).min(self.k) {
            if self.seen[v * self.k + c] > 0 || !self.pairs_free(v, c) {
                continue;
            }
            if !meter.tick() {
                return None;
            }
            let wiped = self.assign(v, c);
            if !wiped {
                match self.search(coloured + 1, meter) {
                    Some(true) => return Some(true),
                    None => {
                        self.unassign(v, c);
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.unassign(v, c);
        }
        Some(false)
    }

    fn run(mut self, meter: &mut Meter) -> Feasibility {
        match self.search(0, meter) {
            Some(true) => Feasibility::Found(self.colour),
            Some(false) => Feasibility::Infeasible,
            None => Feasibility::Exhausted,
        }
    }
}

/// Least `k` with `k(k−1)/2 ≥ m`.
fn pair_count_bound(m: usize) -> usize {
    let mut k = 1;
    while k * (k - 1) / 2 < m {
        k += 1;
    }
    k
}

/// The harmonious chromatic number by iterative deepening from
/// `max(Δ + 1, least k with C(k,2) ≥ m)` up to the greedy value.
pub fn harmonious_exact(g: &UndirectedGraph, budget: Budget) -> Result<SearchResult> {
    if g.n() > HARMONIOUS_EXACT_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "exact harmonious colouring is limited to n <= {HARMONIOUS_EXACT_LIMIT}, got {}",
            g.n()
        )));
    }
    let mut meter = Meter::new(budget);
    let mut upper = harmonious_greedy(g, 0).witness;
    for seed in 1..8 {
        let c = harmonious_greedy(g, seed).witness;
        if c.num_colours() < upper.num_colours() {
            upper = c;
        }
    }
    let ub = upper.num_colours();
    let lb = (g.max_degree() + 1).max(pair_count_bound(g.m()));
    let ball: Vec<Vec<usize>> = (0..g.n()).map(|v| ball2(g, v)).collect();
    let mut k = lb;
    while k < ub {
        match HarmoniousSearch::new(g, &ball, k).run(&mut meter) {
            Feasibility::Found(c) => {
                return Ok(SearchResult {
                    value: k,
                    lower: k,
                    completed: true,
                    witness: Colouring::normalized(&c),
                    orientation: None,
                    stats: meter.stats(),
                })
            }
            Feasibility::Infeasible => k += 1,
            Feasibility::Exhausted => {
                return Ok(SearchResult {
                    value: ub,
                    lower: k,
                    completed: false,
                    witness: upper,
                    orientation: None,
                    stats: meter.stats(),
                })
            }
        }
    }
    Ok(SearchResult {
        value: ub,
        lower: ub,
        completed: true,
        witness: upper,
        orientation: None,
        stats: meter.stats(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_basic, gen_hypercube, BasicKind};

    fn brute_force(g: &UndirectedGraph) -> usize {
        fn rec(g: &UndirectedGraph, c: &mut Vec<usize>, used: usize, best: &mut usize) {
            if used >= *best {
                return;
            }
            if c.len() == g.n() {
                let col = Colouring::new(c.clone()).unwrap();
                if is_harmonious(g, &col).unwrap() {
                    *best = used;
                }
                return;
            }
            for colour in 0..=used {
                c.push(colour);
                rec(g, c, used.max(colour + 1), best);
                c.pop();
            }
        }
        let mut best = g.n() + 1;
        rec(g, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn checker_examples() {
        let p4 = gen_basic(BasicKind::Path, 4).unwrap();
        assert!(is_harmonious(&p4, &Colouring::new(vec![0, 1, 2, 0]).unwrap()).unwrap());
        assert!(!is_harmonious(&p4, &Colouring::new(vec![0, 1, 0, 1]).unwrap()).unwrap());
        let k3 = gen_basic(BasicKind::Complete, 3).unwrap();
        assert!(is_harmonious(&k3, &Colouring::new(vec![0, 1, 2]).unwrap()).unwrap());
    }

    #[test]
    fn greedy_examples() {
        let star = gen_basic(BasicKind::Star, 4).unwrap();
        for seed in 0..10 {
            let r = harmonious_greedy(&star, seed);
            assert_eq!(r.value, 4);
            assert!(is_harmonious(&star, &r.witness).unwrap());
        }
        let empty = UndirectedGraph::new(5, &[]).unwrap();
        assert_eq!(harmonious_greedy(&empty, 0).value, 1);
        let q4 = gen_hypercube(4).unwrap();
        for seed in 0..10 {
            let r = harmonious_greedy(&q4, seed);
            assert!(r.value <= q4.n());
            assert!(is_harmonious(&q4, &r.witness).unwrap());
        }
    }

    #[test]
    fn exact_examples() {
        let k3 = gen_basic(BasicKind::Complete, 3).unwrap();
        assert_eq!(harmonious_exact(&k3, Budget::default()).unwrap().value, 3);
        let p4 = gen_basic(BasicKind::Path, 4).unwrap();
        assert_eq!(brute_force(&p4), 3);
        assert_eq!(harmonious_exact(&p4, Budget::default()).unwrap().value, 3);
        let star = gen_basic(BasicKind::Star, 4).unwrap();
        assert_eq!(brute_force(&star), 4);
        assert_eq!(harmonious_exact(&star, Budget::default()).unwrap().value, 4);
        assert!(harmonious_exact(&gen_hypercube(4).unwrap(), Budget::default()).is_err());
    }

    #[test]
    fn exact_matches_brute_force() {
        let graphs = [
            gen_basic(BasicKind::Cycle, 5).unwrap(),
            gen_basic(BasicKind::Cycle, 6).unwrap(),
            gen_basic(BasicKind::Path, 7).unwrap(),
            gen_basic(BasicKind::Complete, 4).unwrap(),
            gen_hypercube(2).unwrap(),
            gen_hypercube(3).unwrap(),
            UndirectedGraph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let r = harmonious_exact(g, Budget::default()).unwrap();
            assert!(r.completed);
            assert_eq!(r.value, brute_force(g), "{:?}", g.edges());
            assert!(is_harmonious(g, &r.witness).unwrap());
        }
    }
}
