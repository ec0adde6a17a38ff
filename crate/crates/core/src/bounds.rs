//! Lower and upper bounds on the oriented chromatic number `χo(G)` of an
//! undirected graph with `n` vertices, `m` edges, maximum degree `Δ` and
//! average degree `δ = 2m/n`. All logarithms are binary.
//!
//! Lower bounds:
//!
//! * counting: `C(k,2) + n·log k ≥ m` for `k = χo(G)` (there are `2^m`
//!   orientations, at most `k^n` colourings, each serving at most `2^C(k,2)` of
//!   them); [`ksz_lower`] is the least such `k`.
//! * `√(n·t)` where `t + log t = δ − log n` ([`lemma3_lower`]).
//! * `√t₀·√n` with `t₀ + log t₀ = 0` whenever `δ ≥ log n` ([`lemma4_lower`]).
//! * `√(ε/(1+ε)·(2m − n log n))` whenever `δ ≥ log n + (1+ε)·log t` ([`lemma5_lower`]).
//! * `2^(Δ/2)` for `Δ`-regular graphs with sufficiently many vertices; the
//!   threshold is unquantified, so this one never enters a bracket.
//!
//! Upper bounds: `2Δ√(n−1)` via harmonious colourings, `2Δ²·2^Δ`, and `n`.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Maximum accepted `|t + log t − rhs|`.
pub const T_RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Values this close to an integer are not bumped by ceiling/floor.
const INTEGER_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TSolution {
    pub rhs: f64,
    pub t: f64,
    pub residual: f64,
}

/// `log2 t + t − rhs`, evaluated so the subtraction is exact near the root.
fn t_equation(t: f64, rhs: f64) -> f64 {
    (t - rhs) + t.log2()
}

/// Root of `t + log2 t = rhs` by bisection. The left side increases strictly
/// from −∞ to ∞ on `(0, ∞)`, so the root always exists and is unique.
pub fn solve_t_rhs(rhs: f64) -> TSolution {
    let mut hi = rhs.max(1.0) + 1.0;
    let mut lo = 1.0;
    while t_equation(lo, rhs) >= 0.0 {
        lo *= 0.5;
    }
    while t_equation(hi, rhs) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..4096 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if t_equation(mid, rhs) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (rl, rh) = (t_equation(lo, rhs), t_equation(hi, rhs));
    let (t, residual) = if rh.abs() <= rl.abs() { (hi, rh) } else { (lo, rl) };
    TSolution {
        rhs,
        t,
        residual: residual.abs(),
    }
}

/// `t` for a graph: `rhs = δ − log2 n`.
pub fn solve_t(n: usize, m: usize) -> TSolution {
    solve_t_rhs(avg_degree(n, m) - log2(n))
}

/// The constant `√t₀` where `t₀ + log2 t₀ = 0` (about 0.80074).
pub fn sqrt_t0() -> f64 {
    solve_t_rhs(0.0).t.sqrt()
}

fn avg_degree(n: usize, m: usize) -> f64 {
    2.0 * m as f64 / n as f64
}

fn log2(x: usize) -> f64 {
    (x as f64).log2()
}

fn ksz_holds(k: usize, n: usize, m: usize) -> bool {
    let pairs = (k * (k - 1) / 2) as f64;
    pairs + n as f64 * log2(k) >= m as f64
}

/// Least `k ≥ 1` with `k(k−1)/2 + n·log2 k ≥ m`.
pub fn ksz_lower(n: usize, m: usize) -> usize {
    let (mut lo, mut hi) = (1, m.max(1) + 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if ksz_holds(mid, n, m) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// `√(n·t)`.
pub fn lemma3_lower(n: usize, m: usize) -> f64 {
    (n as f64 * solve_t(n, m).t).sqrt()
}

/// `√t₀·√n` when `δ ≥ log2 n`.
pub fn lemma4_lower(n: usize, m: usize) -> Option<f64> {
    (avg_degree(n, m) >= log2(n)).then(|| sqrt_t0() * (n as f64).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma5 {
    pub epsilon: f64,
    pub value: Option<f64>,
    /// `δ ≥ log2 n + (1+ε)·log2 t`.
    pub hypothesis: bool,
    /// `δ ≥ (2+ε)·log2 n`, which implies the hypothesis.
    pub sufficient: bool,
    pub reason: Option<String>,
}

/// `√(ε/(1+ε)·(2m − n·log2 n))`, present when the degree hypothesis holds and
/// the radicand is positive.
pub fn lemma5_lower(n: usize, m: usize, epsilon: f64) -> Result<Lemma5> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    let delta = avg_degree(n, m);
    let logn = log2(n);
    let t = solve_t(n, m).t;
    let threshold = logn + (1.0 + epsilon) * t.log2();
    let hypothesis = delta >= threshold;
    let sufficient = delta >= (2.0 + epsilon) * logn;
    let radicand = 2.0 * m as f64 - n as f64 * logn;
    let (value, reason) = if !hypothesis {
        (
            None,
            Some(format!(
                "hypothesis fails: average degree {delta:.6} < log2 n + (1+ε)·log2 t = {threshold:.6}"
            )),
        )
    } else if radicand <= 0.0 {
        (
            None,
            Some(format!("vacuous: 2m − n·log2 n = {radicand:.6} is not positive")),
        )
    } else {
        ((epsilon / (1.0 + epsilon) * radicand).sqrt().into(), None)
    };
    Ok(Lemma5 {
        epsilon,
        value,
        hypothesis,
        sufficient,
        reason,
    })
}

/// `2Δ√(n−1)`.
pub fn upper_mx(n: usize, max_degree: usize) -> f64 {
    2.0 * max_degree as f64 * ((n - 1) as f64).sqrt()
}

/// `(2^(Δ/2), 2Δ²·2^Δ)`. The lower value needs a regular graph with
/// sufficiently many vertices; the upper is vacuous at `Δ = 0`.
pub fn degree_bounds(max_degree: usize) -> (f64, f64) {
    let d = max_degree as f64;
    (2f64.powf(d / 2.0), 2.0 * d * d * 2f64.powf(d))
}

/// Endpoints `((n/2)·log2(n/2), n·⌈log2 n⌉)` of the known bracket on the
/// minimum arc count of an `n`-vertex oclique.
pub fn fn_bracket(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let half = n as f64 / 2.0;
    let ceil_log = (n - 1).ilog2() as usize + 1;
    Ok((half * half.log2(), (n * ceil_log) as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypercubeBracket {
    pub d: u32,
    pub lower: f64,
    /// `min(2d√(2^d − 1), 2^d)`.
    pub upper: f64,
    pub uncapped_upper: f64,
    /// The ratio remark `5d/2`.
    pub factor_gap: f64,
}

pub fn hypercube_bracket(d: u32) -> Result<HypercubeBracket> {
    if !(1..=62).contains(&d) {
        return Err(Error::InvalidParameter(format!("dimension must be in 1..=62, got {d}")));
    }
    let n = 1usize << d;
    let m = d as usize * (n / 2);
    let lower = lemma4_lower(n, m).expect("hypercubes satisfy δ = log2 n");
    let uncapped_upper = upper_mx(n, d as usize);
    Ok(HypercubeBracket {
        d,
        lower,
        upper: uncapped_upper.min(n as f64),
        uncapped_upper,
        factor_gap: 2.5 * d as f64,
    })
}

/// Ceiling, except values within the guard of an integer round to it.
pub fn ceil_guarded(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() <= INTEGER_GUARD {
        r.max(0.0) as usize
    } else {
        x.ceil().max(0.0) as usize
    }
}

/// Floor, with the same guard as [`ceil_guarded`].
pub fn floor_guarded(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() <= INTEGER_GUARD {
        r.max(0.0) as usize
    } else {
        x.floor().max(0.0) as usize
    }
}

/// Rounds to 6 significant digits.
pub fn sig6(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

fn ser_sig6<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(sig6(*x))
    } else {
        s.serialize_none()
    }
}

fn ser_opt_sig6<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser_sig6(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    #[serde(serialize_with = "ser_sig6")]
    pub avg_degree: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBounds {
    pub ksz: usize,
    #[serde(serialize_with = "ser_sig6")]
    pub lemma3: f64,
    #[serde(serialize_with = "ser_opt_sig6")]
    pub lemma4: Option<f64>,
    #[serde(serialize_with = "ser_opt_sig6")]
    pub lemma5: Option<f64>,
    #[serde(serialize_with = "ser_sig6")]
    pub degree_lb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UpperBounds {
    #[serde(serialize_with = "ser_sig6")]
    pub mx: f64,
    #[serde(serialize_with = "ser_sig6")]
    pub degree_ub: f64,
    pub trivial: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub lo: usize,
    pub hi: usize,
}

/// The chain `√(ε/(2+ε)·Δn) ≤ √(ε/(1+ε)·(Δ − log2 n)·n) ≤ 2Δ√(n−1)` for a
/// `Δ`-regular graph with `Δ ≥ (2+ε)·log2 n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularSandwich {
    pub weak: f64,
    pub strong: f64,
    pub upper: f64,
    pub holds: bool,
}

/// Every bound for one graph. Serializes to the fixed report schema
/// (`graph`, `lower`, `upper`, `bracket`, `flags`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub graph: GraphSummary,
    pub lower: LowerBounds,
    pub upper: UpperBounds,
    pub bracket: Bracket,
    pub flags: Vec<String>,
    #[serde(skip)]
    pub t: TSolution,
    #[serde(skip)]
    pub lemma5_detail: Lemma5,
    #[serde(skip)]
    pub sandwich: Option<RegularSandwich>,
}

impl BoundsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable report carrying the same rounded numbers as the JSON.
    pub fn to_text(&self) -> String {
        let opt = |x: Option<f64>| x.map_or("n/a".to_string(), |v| sig6(v).to_string());
        let g = &self.graph;
        let mut s = format!(
            "graph: n = {}, m = {}, max degree = {}, average degree = {}\n",
            g.n,
            g.m,
            g.max_degree,
            sig6(g.avg_degree)
        );
        s += &format!("t = {} (t + log2 t = {})\n", sig6(self.t.t), sig6(self.t.rhs));
        s += "lower bounds:\n";
        s += &format!("  ksz        {}\n", self.lower.ksz);
        s += &format!("  lemma3     {}\n", sig6(self.lower.lemma3));
        s += &format!("  lemma4     {}\n", opt(self.lower.lemma4));
        s += &format!("  lemma5     {}  (epsilon = {})\n", opt(self.lower.lemma5), self.lemma5_detail.epsilon);
        s += &format!("  degree_lb  {}  (informational)\n", sig6(self.lower.degree_lb));
        s += "upper bounds:\n";
        s += &format!("  mx         {}\n", sig6(self.upper.mx));
        s += &format!("  degree_ub  {}\n", sig6(self.upper.degree_ub));
        s += &format!("  trivial    {}\n", self.upper.trivial);
        s += &format!("bracket: [{}, {}]\n", self.bracket.lo, self.bracket.hi);
        for f in &self.flags {
            s += &format!("note: {f}\n");
        }
        s
    }
}

/// Evaluates every bound for `g`. `epsilon` defaults to 1.
pub fn bounds_report(g: &UndirectedGraph, epsilon: Option<f64>) -> Result<BoundsReport> {
    let (n, m, max_degree) = (g.n(), g.m(), g.max_degree());
    let regular = g.is_regular();
    report_from_counts(n, m, max_degree, regular, epsilon)
}

/// [`bounds_report`] from the invariants alone; `regular` says whether every
/// vertex has degree `max_degree`.
pub fn report_from_counts(
    n: usize,
    m: usize,
    max_degree: usize,
    regular: bool,
    epsilon: Option<f64>,
) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let epsilon = epsilon.unwrap_or(1.0);
    let delta = avg_degree(n, m);
    let logn = log2(n);
    let t = solve_t(n, m);
    let mut flags = Vec::new();

    let ksz = ksz_lower(n, m);
    let lemma3 = (n as f64 * t.t).sqrt();
    if delta < logn {
        flags.push(format!(
            "lemma3: average degree {} < log2 n = {}, outside the dense regime",
            sig6(delta),
            sig6(logn)
        ));
    }
    let lemma4 = lemma4_lower(n, m);
    if lemma4.is_none() {
        flags.push("lemma4: hypothesis δ ≥ log2 n fails".to_string());
    }
    let lemma5 = lemma5_lower(n, m, epsilon)?;
    if let Some(reason) = &lemma5.reason {
        flags.push(format!("lemma5: {reason}"));
    }
    flags.push(format!(
        "lemma5: sufficient condition δ ≥ (2+ε)·log2 n {}",
        if lemma5.sufficient { "holds" } else { "fails" }
    ));
    let (degree_lb, degree_ub) = degree_bounds(max_degree);
    flags.push("degree_lb: needs a regular graph with sufficiently many vertices; excluded from bracket".to_string());

    let mx = upper_mx(n, max_degree);
    let mut hi = n;
    if max_degree == 0 {
        flags.push("mx, degree_ub: vacuous for an edgeless graph".to_string());
    } else {
        hi = hi.min(floor_guarded(mx));
        if degree_ub.is_finite() {
            hi = hi.min(floor_guarded(degree_ub));
        }
    }
    let lo = [
        Some(ksz),
        Some(ceil_guarded(lemma3)),
        lemma4.map(ceil_guarded),
        lemma5.value.map(ceil_guarded),
    ]
    .into_iter()
    .flatten()
    .max()
    .unwrap_or(1);

    let mut sandwich = None;
    if regular && m > 0 {
        if (max_degree as f64) >= (2.0 + epsilon) * logn {
            let d = max_degree as f64;
            let weak = (epsilon / (2.0 + epsilon) * d * n as f64).sqrt();
            let strong = (epsilon / (1.0 + epsilon) * (d - logn) * n as f64).sqrt();
            let slack = 1e-9 * strong.max(1.0);
            let holds = weak <= strong + slack && strong <= mx + slack;
            flags.push(if holds {
                format!(
                    "regular sandwich holds: {} ≤ {} ≤ {}",
                    sig6(weak),
                    sig6(strong),
                    sig6(mx)
                )
            } else {
                format!(
                    "regular sandwich VIOLATED: {weak} ≤ {strong} ≤ {mx} fails"
                )
            });
            sandwich = Some(RegularSandwich {
                weak,
                strong,
                upper: mx,
                holds,
            });
        } else {
            flags.push(format!(
                "regular sandwich not checked: Δ = {max_degree} < (2+ε)·log2 n = {}",
                sig6((2.0 + epsilon) * logn)
            ));
        }
    }
    if lo > hi {
        flags.push(format!("inconsistent bracket: lower {lo} exceeds upper {hi}"));
    }

    Ok(BoundsReport {
        graph: GraphSummary {
            n,
            m,
            max_degree,
            avg_degree: delta,
        },
        lower: LowerBounds {
            ksz,
            lemma3,
            lemma4,
            lemma5: lemma5.value,
            degree_lb,
        },
        upper: UpperBounds {
            mx,
            degree_ub,
            trivial: n,
        },
        bracket: Bracket { lo, hi },
        flags,
        t,
        lemma5_detail: lemma5,
        sandwich,
    })
}

/// Bounds report for `Q_d` without materialising the graph.
pub fn hypercube_report(d: u32, epsilon: Option<f64>) -> Result<BoundsReport> {
    if !(1..=62).contains(&d) {
        return Err(Error::InvalidParameter(format!("dimension must be in 1..=62, got {d}")));
    }
    let n = 1usize << d;
    report_from_counts(n, d as usize * (n / 2), d as usize, true, epsilon)
}
