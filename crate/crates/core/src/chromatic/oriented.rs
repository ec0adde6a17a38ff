use std::collections::{HashMap, HashSet};

use super::{Budget, Colouring, Feasibility, Meter, SearchResult, SearchStats};
use crate::error::Result;
use crate::graph::{enumerate_orientations, orient_bits, OrientedGraph, UndirectedGraph};
use crate::rng::SeededRng;

const UNSET: usize = usize::MAX;

/// True iff `c` is proper on the underlying graph and no two arcs `v -> w`,
/// `x -> y` have `c(v) = c(y)` and `c(w) = c(x)`.
pub fn is_oriented_colouring(d: &OrientedGraph, c: &Colouring) -> Result<bool> {
    c.check_domain(d.n())?;
    let mut directions = HashSet::new();
    for &(u, v) in d.arcs() {
        let (a, b) = (c.colour(u), c.colour(v));
        if a == b || directions.contains(&(b, a)) {
            return Ok(false);
        }
        directions.insert((a, b));
    }
    Ok(true)
}

/// Vertices that must receive a colour different from `v` in every oriented
/// colouring: neighbours, and the ends of directed 2-paths through a neighbour.
pub fn conflict_partners(d: &OrientedGraph, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &w in d.out_neighbours(v) {
        out.push(w);
        out.extend_from_slice(d.out_neighbours(w));
    }
    for &u in d.in_neighbours(v) {
        out.push(u);
        out.extend_from_slice(d.in_neighbours(u));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// A set of vertices pairwise joined by an arc or a directed 2-path, found
/// greedily. Its size is a lower bound on the oriented chromatic number.
///
/// Every vertex is tried as a seed when `n ≤ 256`; larger graphs try the first 64.
pub fn diameter_two_core(d: &OrientedGraph) -> Vec<usize> {
    let n = d.n();
    if n == 0 {
        return Vec::new();
    }
    let mut cache: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut partners = |v: usize| -> Vec<usize> {
        cache.entry(v).or_insert_with(|| conflict_partners(d, v)).clone()
    };
    let seeds = if n <= 256 { n } else { 64 };
    let mut best = vec![0];
    for seed in 0..seeds {
        let candidates = partners(seed);
        if candidates.len() < best.len() {
            continue;
        }
        let mut ranked: Vec<(usize, usize)> = candidates
            .iter()
            .map(|&u| (partners(u).len(), u))
            .collect();
        ranked.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut core = vec![seed];
        let mut core_partners = vec![candidates];
        for (_, u) in ranked {
            if core_partners.iter().all(|p| p.binary_search(&u).is_ok()) {
                core.push(u);
                core_partners.push(partners(u));
            }
        }
        if core.len() > best.len() {
            core.sort_unstable();
            best = core;
        }
    }
    best
}

/// Greedy oriented colouring along a seeded random vertex order.
///
/// Each vertex takes the least colour that keeps the partial colouring valid
/// and distinct from every coloured vertex at the end of a directed 2-path
/// through it; a fresh colour always qualifies, so the greedy never gets stuck.
pub fn ochi_heuristic(d: &OrientedGraph, seed: u64) -> SearchResult {
    let order = SeededRng::new(seed).permutation(d.n());
    ochi_heuristic_order(d, &order)
}

pub fn ochi_heuristic_order(d: &OrientedGraph, order: &[usize]) -> SearchResult {
    let start = web_time::Instant::now();
    let raw = greedy_colour(d, order);
    let witness = Colouring::normalized(&raw);
    let value = witness.num_colours();
    let lower = usize::from(d.n() > 0) + usize::from(d.m() > 0);
    SearchResult {
        value,
        lower: lower.min(value),
        completed: value == lower,
        witness,
        orientation: None,
        stats: SearchStats {
            nodes: d.n() as u64,
            elapsed: start.elapsed(),
        },
    }
}

fn greedy_colour(d: &OrientedGraph, order: &[usize]) -> Vec<usize> {
    let mut colour = vec![UNSET; d.n()];
    // Arcs between colour classes seen so far: succ[a] holds b when some arc goes a -> b.
    let mut succ: Vec<HashSet<usize>> = Vec::new();
    let mut pred: Vec<HashSet<usize>> = Vec::new();
    let mut stamp: Vec<usize> = Vec::new();
    for (step, &v) in order.iter().enumerate() {
        let mark = step + 1;
        for &w in d.out_neighbours(v) {
            let b = colour[w];
            if b != UNSET {
                stamp[b] = mark;
                // v -> w would add c -> b; clashes with an existing b -> c.
                for &a in &succ[b] {
                    stamp[a] = mark;
                }
            }
            for &x in d.out_neighbours(w) {
                if colour[x] != UNSET {
                    stamp[colour[x]] = mark;
                }
            }
        }
        for &u in d.in_neighbours(v) {
            let b = colour[u];
            if b != UNSET {
                stamp[b] = mark;
                for &a in &pred[b] {
                    stamp[a] = mark;
                }
            }
            for &x in d.in_neighbours(u) {
                if colour[x] != UNSET {
                    stamp[colour[x]] = mark;
                }
            }
        }
        let c = match stamp.iter().position(|&s| s != mark) {
            Some(c) => c,
            None => {
                succ.push(HashSet::new());
                pred.push(HashSet::new());
                stamp.push(0);
                stamp.len() - 1
            }
        };
        colour[v] = c;
        for &w in d.out_neighbours(v) {
            if colour[w] != UNSET {
                succ[c].insert(colour[w]);
                pred[colour[w]].insert(c);
            }
        }
        for &u in d.in_neighbours(v) {
            if colour[u] != UNSET {
                succ[colour[u]].insert(c);
                pred[c].insert(colour[u]);
            }
        }
    }
    colour
}

/// Fixed-`k` backtracking search for an oriented colouring.
struct OrientedSearch<'a> {
    d: &'a OrientedGraph,
    partners: &'a [Vec<usize>],
    k: usize,
    colour: Vec<usize>,
    class_size: Vec<usize>,
    used: usize,
    /// `arcs[a * k + b]`: arcs currently running from class `a` to class `b`.
    arcs: Vec<u32>,
    /// `seen[v * k + c]`: coloured conflict partners of `v` with colour `c`.
    seen: Vec<u32>,
    saturation: Vec<usize>,
}

enum Step {
    Found,
    Fail,
    Exhausted,
}

impl<'a> OrientedSearch<'a> {
    fn new(d: &'a OrientedGraph, partners: &'a [Vec<usize>], k: usize) -> Self {
        let n = d.n();
        OrientedSearch {
            d,
            partners,
            k,
            colour: vec![UNSET; n],
            class_size: vec![0; k],
            used: 0,
            arcs: vec![0; k * k],
            seen: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn run(mut self, meter: &mut Meter) -> Feasibility {
        match self.search(0, meter) {
            Step::Found => Feasibility::Found(self.colour),
            Step::Fail => Feasibility::Infeasible,
            Step::Exhausted => Feasibility::Exhausted,
        }
    }

    /// Uncoloured vertex with most distinct partner colours, then highest
    /// degree, then lowest index.
    fn pick(&self) -> usize {
        let mut best = UNSET;
        let mut key = (0, 0);
        for v in 0..self.d.n() {
            if self.colour[v] != UNSET {
                continue;
            }
            let k = (self.saturation[v], self.d.out_degree(v) + self.d.in_degree(v));
            if best == UNSET || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn direction_ok(&self, v: usize, c: usize) -> bool {
        let k = self.k;
        self.d
            .out_neighbours(v)
            .iter()
            .filter(|&&w| self.colour[w] != UNSET)
            .all(|&w| self.arcs[self.colour[w] * k + c] == 0)
            && self
                .d
                .in_neighbours(v)
                .iter()
                .filter(|&&u| self.colour[u] != UNSET)
                .all(|&u| self.arcs[c * k + self.colour[u]] == 0)
    }

    /// Assigns and reports whether some uncoloured partner is left with no colour.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let k = self.k;
        self.colour[v] = c;
        self.class_size[c] += 1;
        if self.class_size[c] == 1 {
            self.used += 1;
        }
        for &w in self.d.out_neighbours(v) {
            if self.colour[w] != UNSET {
                self.arcs[c * k + self.colour[w]] += 1;
            }
        }
        for &u in self.d.in_neighbours(v) {
            if self.colour[u] != UNSET {
                self.arcs[self.colour[u] * k + c] += 1;
            }
        }
        let mut wiped = false;
        for &u in self.partners[v].iter() {
            let slot = &mut self.seen[u * k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
                if self.colour[u] == UNSET && self.saturation[u] == k {
                    wiped = true;
                }
            }
        }
        wiped
    }

    fn unassign(&mut self, v: usize, c: usize) {
        let k = self.k;
        for &u in self.partners[v].iter() {
            let slot = &mut self.seen[u * k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
        for &w in self.d.out_neighbours(v) {
            if self.colour[w] != UNSET {
                self.arcs[c * k + self.colour[w]] -= 1;
            }
        }
        for &u in self.d.in_neighbours(v) {
            if self.colour[u] != UNSET {
                self.arcs[self.colour[u] * k + c] -= 1;
            }
        }
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.used -= 1;
        }
        self.colour[v] = UNSET;
    }

    fn search(&mut self, coloured: usize, meter: &mut Meter) -> Step {
        if coloured == self.d.n() {
            return Step::Found;
        }
        let v = self.pick();
        // Colours are interchangeable: open at most one new class per step.
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.seen[v * self.k + c] > 0 || !self.direction_ok(v, c) {
                continue;
            }
            if !meter.tick() {
                return Step::Exhausted;
            }
            let wiped = self.assign(v, c);
            if !wiped {
                match self.search(coloured + 1, meter) {
                    Step::Found => return Step::Found,
                    Step::Exhausted => {
                        self.unassign(v, c);
                        return Step::Exhausted;
                    }
                    Step::Fail => {}
                }
            }
            self.unassign(v, c);
        }
        Step::Fail
    }
}

/// Outcome of [`solve_above`].
enum Above {
    /// `χo(D) ≤ floor`.
    AtMost,
    Exact(usize, Colouring),
    Exhausted {
        lower: usize,
        upper: usize,
        witness: Colouring,
    },
}

const HEURISTIC_SEEDS: u64 = 8;

fn best_heuristic(d: &OrientedGraph) -> Colouring {
    let identity: Vec<usize> = (0..d.n()).collect();
    let mut best = Colouring::normalized(&greedy_colour(d, &identity));
    for seed in 0..HEURISTIC_SEEDS {
        let c = Colouring::normalized(&greedy_colour(d, &SeededRng::new(seed).permutation(d.n())));
        if c.num_colours() < best.num_colours() {
            best = c;
        }
    }
    best
}

/// Determines `χo(D)` if it exceeds `floor`. Iterative deepening over `k`
/// between the core lower bound and the greedy upper bound.
fn solve_above(d: &OrientedGraph, floor: usize, meter: &mut Meter) -> Above {
    let upper = best_heuristic(d);
    let ub = upper.num_colours();
    if ub <= floor {
        return Above::AtMost;
    }
    let lb = diameter_two_core(d).len().max(usize::from(d.n() > 0));
    if lb >= ub {
        return Above::Exact(ub, upper);
    }
    let partners: Vec<Vec<usize>> = (0..d.n()).map(|v| conflict_partners(d, v)).collect();
    let mut k = lb;
    if floor >= lb {
        match OrientedSearch::new(d, &partners, floor).run(meter) {
            Feasibility::Found(_) => return Above::AtMost,
            Feasibility::Infeasible => k = floor + 1,
            Feasibility::Exhausted => {
                return Above::Exhausted {
                    lower: lb,
                    upper: ub,
                    witness: upper,
                }
            }
        }
    }
    while k < ub {
        match OrientedSearch::new(d, &partners, k).run(meter) {
            Feasibility::Found(c) => return Above::Exact(k, Colouring::normalized(&c)),
            Feasibility::Infeasible => k += 1,
            Feasibility::Exhausted => {
                return Above::Exhausted {
                    lower: k,
                    upper: ub,
                    witness: upper,
                }
            }
        }
    }
    Above::Exact(ub, upper)
}

/// The oriented chromatic number of `d`, with a witness colouring.
///
/// Budget exhaustion is not an error: the result then has `completed == false`
/// and carries the certified lower bound and the best colouring found.
pub fn ochi_exact(d: &OrientedGraph, budget: Budget) -> SearchResult {
    let mut meter = Meter::new(budget);
    let (value, lower, completed, witness) = match solve_above(d, 0, &mut meter) {
        Above::Exact(k, c) => (k, k, true, c),
        Above::Exhausted {
            lower,
            upper,
            witness,
        } => (upper, lower, false, witness),
        Above::AtMost => unreachable!("every graph with a vertex needs a colour"),
    };
    SearchResult {
        value,
        lower,
        completed,
        witness,
        orientation: None,
        stats: meter.stats(),
    }
}

/// `χo(G)`: the largest `χo(D)` over all orientations `D` of `g`.
///
/// Only masks with the top bit clear are searched: flipping every bit reverses
/// every arc, and the reversed digraph has the same oriented colourings.
/// Each orientation gets its own `budget`.
pub fn ochi_graph_exact(g: &UndirectedGraph, budget: Budget) -> Result<SearchResult> {
    let total = enumerate_orientations(g)?.total();
    let half = if g.m() == 0 { 1 } else { total / 2 };
    let start = web_time::Instant::now();
    let mut nodes = 0;
    let mut best: Option<(usize, u64, Colouring)> = None;
    let mut pending: Option<(usize, usize, u64, Colouring)> = None;
    let mut pending_lower = 0;
    for mask in 0..half {
        let d = orient_bits(g, mask)?;
        let floor = best.as_ref().map_or(0, |b| b.0);
        let mut meter = Meter::new(budget);
        let outcome = solve_above(&d, floor, &mut meter);
        nodes += meter.stats().nodes;
        match outcome {
            Above::AtMost => {}
            Above::Exact(k, c) => best = Some((k, mask, c)),
            Above::Exhausted {
                lower,
                upper,
                witness,
            } => {
                pending_lower = pending_lower.max(lower);
                if pending.as_ref().is_none_or(|p| upper > p.1) {
                    pending = Some((lower, upper, mask, witness));
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.0 == g.n()) {
            break;
        }
    }
    let (exact, mask, witness) = best.expect("mask 0 always yields a value");
    let stats = SearchStats {
        nodes,
        elapsed: start.elapsed(),
    };
    Ok(match pending {
        Some((_, upper, pmask, pwitness)) if upper > exact => SearchResult {
            value: upper,
            lower: pending_lower.max(exact),
            completed: false,
            witness: pwitness,
            orientation: Some(pmask),
            stats,
        },
        // Every unfinished orientation is capped at or below the best exact value.
        _ => SearchResult {
            value: exact,
            lower: exact,
            completed: true,
            witness,
            orientation: Some(mask),
            stats,
        },
    })
}
