//! Browser bindings. Each operation has a plain Rust form returning a JSON
//! string, which the `wasm_bindgen` exports wrap for the page in `www/`.

use ochromatic::bounds::{ceil_guarded, floor_guarded, hypercube_bracket};
use ochromatic::chromatic::{is_oriented_colouring, ochi_exact, Budget};
use ochromatic::graph::{gen_basic, gen_hypercube, random_orientation, BasicKind, UndirectedGraph};
use ochromatic::oclique::{lemma2_digraph, pair_diameter, verify_lemma2, Diameter, Lemma2Params};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest dimension plotted on the bracket chart.
pub const CURVE_MAX_DIM: u32 = 40;
/// Largest family parameter drawn; n = 45 vertices still fits on a circle.
pub const FAMILY_MAX_P: usize = 10;
/// Largest graph offered for orient-and-colour.
pub const ORIENT_MAX_VERTICES: usize = 16;
const ORIENT_BUDGET: u64 = 2_000_000;

#[derive(Serialize)]
struct CurvePoint {
    d: u32,
    log2_n: u32,
    lower: f64,
    upper: f64,
    uncapped_upper: f64,
    lower_int: usize,
    upper_int: usize,
}

/// `[lower, upper]` on χo(Q_d) for `d = 1..=d_max`.
pub fn bracket_curve(d_max: u32) -> Result<String, String> {
    if !(1..=CURVE_MAX_DIM).contains(&d_max) {
        return Err(format!("d_max must be in 1..={CURVE_MAX_DIM}"));
    }
    let points = (1..=d_max)
        .map(|d| {
            let b = hypercube_bracket(d).map_err(|e| e.to_string())?;
            Ok(CurvePoint {
                d,
                log2_n: d,
                lower: b.lower,
                upper: b.upper,
                uncapped_upper: b.uncapped_upper,
                lower_int: ceil_guarded(b.lower),
                upper_int: floor_guarded(b.upper),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(serde_json::to_string(&points).expect("points serialize"))
}

#[derive(Serialize)]
struct FamilyView {
    p: usize,
    n: usize,
    labels: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    passed: bool,
    clauses: Vec<ochromatic::oclique::Clause>,
}

/// The regular oclique for `p` with its checked properties.
pub fn family_member(p: usize) -> Result<String, String> {
    if !(3..=FAMILY_MAX_P).contains(&p) {
        return Err(format!("p must be in 3..={FAMILY_MAX_P}"));
    }
    let params = Lemma2Params::new(p).map_err(|e| e.to_string())?;
    let d = lemma2_digraph(p).map_err(|e| e.to_string())?;
    let report = verify_lemma2(p).map_err(|e| e.to_string())?;
    let view = FamilyView {
        p,
        n: d.n(),
        labels: params.labels().collect(),
        arcs: d.arcs().to_vec(),
        passed: report.passed(),
        clauses: report.clauses,
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

#[derive(Serialize)]
struct OrientedView {
    n: usize,
    arcs: Vec<(usize, usize)>,
    colours: Vec<usize>,
    chi: usize,
    exact: bool,
    pair_diameter: Option<usize>,
    far_pair: Option<(usize, usize)>,
    is_oclique: bool,
}

fn base_graph(kind: &str, size: usize) -> Result<UndirectedGraph, String> {
    let g = if kind == "hypercube" {
        gen_hypercube(size as u32)
    } else {
        let kind: BasicKind = kind.parse().map_err(|e: ochromatic::Error| e.to_string())?;
        gen_basic(kind, size)
    };
    g.map_err(|e| e.to_string())
}

/// A seeded random orientation of a small graph, with an optimal oriented
/// colouring and its pair-diameter. For `hypercube`, `size` is the dimension.
pub fn orient_and_colour(kind: &str, size: usize, seed: u64) -> Result<String, String> {
    let g = base_graph(kind, size)?;
    if g.n() > ORIENT_MAX_VERTICES {
        return Err(format!("at most {ORIENT_MAX_VERTICES} vertices, got {}", g.n()));
    }
    let d = random_orientation(&g, seed);
    let solved = ochi_exact(&d, Budget::nodes(ORIENT_BUDGET));
    debug_assert!(is_oriented_colouring(&d, &solved.witness).unwrap_or(false));
    let diameter = pair_diameter(&d);
    let view = OrientedView {
        n: d.n(),
        arcs: d.arcs().to_vec(),
        colours: solved.witness.assignment().to_vec(),
        chi: solved.value,
        exact: solved.completed,
        pair_diameter: match diameter.value {
            Diameter::Finite(k) => Some(k),
            Diameter::Infinite => None,
        },
        far_pair: diameter.witness,
        is_oclique: diameter.value.is_at_most(2),
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

#[wasm_bindgen(js_name = bracketCurve)]
pub fn bracket_curve_js(d_max: u32) -> Result<String, JsValue> {
    bracket_curve(d_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = familyMember)]
pub fn family_member_js(p: usize) -> Result<String, JsValue> {
    family_member(p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = orientAndColour)]
pub fn orient_and_colour_js(kind: &str, size: usize, seed: u64) -> Result<String, JsValue> {
    orient_and_colour(kind, size, seed).map_err(|e| JsValue::from_str(&e))
}
