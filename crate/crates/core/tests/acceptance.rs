//! Acceptance gate. Every criterion runs in one test so the summary prints as a
//! block; run with `cargo test -p ochromatic --test acceptance -- --nocapture`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ochromatic::bounds::{ksz_lower, lemma3_lower, sqrt_t0, solve_t_rhs, upper_mx, T_RESIDUAL_TOLERANCE};
use ochromatic::chromatic::{harmonious_exact, ochi_exact, ochi_graph_exact, Budget};
use ochromatic::experiment::{run_experiment, ExperimentConfig};
use ochromatic::graph::{enumerate_orientations, gen_hypercube, gen_k11n_oriented};
use ochromatic::oclique::{pair_diameter, verify_lemma2, Diameter};
use ochromatic::rng::SeededRng;

const LEMMA2_LIMIT: Duration = Duration::from_secs(5);
const CONSTANT_LIMIT: Duration = Duration::from_millis(1);
const SWEEP_LIMIT: Duration = Duration::from_secs(120);
const Q3_LIMIT: Duration = Duration::from_secs(30 * 60);
const KSZ_LIMIT: Duration = Duration::from_millis(1);
const K11N_LIMIT: Duration = Duration::from_secs(1);
const DETERMINISM_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_LIMIT: Duration = Duration::from_secs(120);

/// `⌈0.80074 · d⌉` for `d = 2`.
const HYPERCUBE_CONSTANT: f64 = 0.80074;
const RANDOM_GRAPHS: usize = 200;
const RANDOM_SEED: u64 = 0x0c0_10e5;

type Outcome = Result<String, String>;

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed <= limit {
        Ok(format!("{elapsed:.2?} (limit {limit:?})"))
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let time = within(start.elapsed(), limit)?;
    Ok(format!("{detail}; {time}"))
}

fn lemma2_family() -> Outcome {
    timed(LEMMA2_LIMIT, || {
        for p in 3..=12 {
            let r = verify_lemma2(p).map_err(|e| e.to_string())?;
            if !r.passed() {
                let failed: Vec<String> = r.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
                return Err(format!("p = {p}: {}", failed.join("; ")));
            }
        }
        Ok("p = 3..12 all clauses pass".into())
    })
}

fn constant() -> Outcome {
    timed(CONSTANT_LIMIT, || {
        let root = solve_t_rhs(0.0);
        let c = sqrt_t0();
        let rounded = (c * 1e4).round() / 1e4;
        ensure((rounded - 0.8007).abs() < 1e-12, || format!("√t0 = {c}"))?;
        ensure(root.residual <= T_RESIDUAL_TOLERANCE, || format!("residual {:e}", root.residual))?;
        Ok(format!("√t0 = {c:.6}, residual {:.1e}", root.residual))
    })
}

/// Exact χo for every orientation of every corpus graph, shared by the
/// characterization, counting-bound and chain criteria.
struct Sweep {
    graph: String,
    n: usize,
    m: usize,
    chis: Vec<usize>,
    diameters: Vec<Diameter>,
}

fn sweep_corpus() -> Result<(Vec<Sweep>, Duration), String> {
    let start = Instant::now();
    let mut out = Vec::new();
    for (name, g) in common::corpus() {
        let mut chis = Vec::new();
        let mut diameters = Vec::new();
        for (mask, d) in enumerate_orientations(&g).map_err(|e| e.to_string())? {
            let r = ochi_exact(&d, Budget::default());
            ensure(r.completed, || format!("{name} mask {mask}: budget exhausted"))?;
            chis.push(r.value);
            diameters.push(pair_diameter(&d).value);
        }
        out.push(Sweep {
            graph: name,
            n: g.n(),
            m: g.m(),
            chis,
            diameters,
        });
    }
    Ok((out, start.elapsed()))
}

fn characterization(sweeps: &[Sweep], elapsed: Duration) -> Outcome {
    let mut checked = 0;
    for s in sweeps {
        for (mask, (&chi, &diam)) in s.chis.iter().zip(&s.diameters).enumerate() {
            ensure((chi == s.n) == diam.is_at_most(2), || {
                format!("{} mask {mask}: χo = {chi}, n = {}, pair-diameter {diam}", s.graph, s.n)
            })?;
            checked += 1;
        }
    }
    let time = within(elapsed, SWEEP_LIMIT)?;
    Ok(format!("{checked} orientations, zero counterexamples; {time}"))
}

fn counting_bound(sweeps: &[Sweep]) -> Outcome {
    let mut checked = 0;
    for s in sweeps {
        for &chi in &s.chis {
            let lhs = (chi * (chi - 1) / 2) as f64 + s.n as f64 * (chi as f64).log2();
            ensure(lhs >= s.m as f64, || {
                format!("{}: χo = {chi} gives {lhs} < m = {}", s.graph, s.m)
            })?;
            checked += 1;
        }
    }
    Ok(format!("C(χo,2) + n·log2 χo ≥ m on all {checked} solved instances"))
}

fn chain(sweeps: &[Sweep]) -> Outcome {
    timed(SWEEP_LIMIT, || {
        for ((name, g), s) in common::corpus().into_iter().zip(sweeps) {
            let h = harmonious_exact(&g, Budget::default()).map_err(|e| e.to_string())?;
            ensure(h.completed, || format!("{name}: harmonious budget exhausted"))?;
            let graph = ochi_graph_exact(&g, Budget::default()).map_err(|e| e.to_string())?;
            ensure(graph.completed, || format!("{name}: graph budget exhausted"))?;
            let max_d = *s.chis.iter().max().unwrap();
            ensure(graph.value == max_d, || {
                format!("{name}: graph-level {} but orientation max {max_d}", graph.value)
            })?;
            ensure(h.value >= graph.value, || format!("{name}: hχ {} < χo {}", h.value, graph.value))?;
            let delta = g.max_degree();
            ensure(h.value > delta, || format!("{name}: hχ {} < Δ+1", h.value))?;
            ensure((h.value as f64) > (2.0 * g.m() as f64).sqrt(), || {
                format!("{name}: hχ {} ≤ √(2m)", h.value)
            })?;
            let mx = upper_mx(g.n(), delta);
            ensure(mx >= h.value as f64, || format!("{name}: 2Δ√(n−1) = {mx} < hχ {}", h.value))?;
        }
        Ok("hχ ≥ χo(G) = max χo(D), hχ ≥ Δ+1, hχ > √(2m), 2Δ√(n−1) ≥ hχ on all graphs".into())
    })
}

fn hypercubes() -> Outcome {
    timed(Q3_LIMIT, || {
        let q2 = gen_hypercube(2).map_err(|e| e.to_string())?;
        let r2 = ochi_graph_exact(&q2, Budget::default()).map_err(|e| e.to_string())?;
        let lo2 = (HYPERCUBE_CONSTANT * 2.0).ceil() as usize;
        ensure(r2.completed && (lo2..=4).contains(&r2.value), || {
            format!("χo(Q2) = {} outside [{lo2}, 4]", r2.value)
        })?;

        let q3 = gen_hypercube(3).map_err(|e| e.to_string())?;
        let orientations = enumerate_orientations(&q3).map_err(|e| e.to_string())?;
        let total = orientations.total();
        let mut best = 0;
        let mut swept = 0u64;
        for (mask, d) in orientations {
            let r = ochi_exact(&d, Budget::default());
            ensure(r.completed, || format!("Q3 mask {mask}: budget exhausted"))?;
            best = best.max(r.value);
            swept += 1;
        }
        ensure(swept == total && total == 4096, || format!("swept {swept} of {total}"))?;
        ensure((3..=8).contains(&best), || format!("χo(Q3) = {best} outside [3, 8]"))?;
        Ok(format!("χo(Q2) = {}, χo(Q3) = {best} over {swept} orientations", r2.value))
    })
}

fn ksz_numerics() -> Outcome {
    timed(KSZ_LIMIT, || {
        let (n, m) = (1024, 5120);
        let ksz = ksz_lower(n, m);
        let l3 = lemma3_lower(n, m).ceil() as usize;
        let scan = common::ksz_scan(n, m);
        let t = common::t_oracle(2.0 * m as f64 / n as f64 - (n as f64).log2());
        let l3_oracle = (n as f64 * t).sqrt().ceil() as usize;
        ensure(ksz == 26 && scan == 26, || format!("ksz {ksz}, scan {scan}"))?;
        ensure(l3 == 26 && l3_oracle == 26, || format!("√(nt) rounds to {l3}, oracle {l3_oracle}"))?;
        Ok("Q10: counting bound 26, ⌈√(nt)⌉ 26, both oracles agree".into())
    })
}

fn k11n() -> Outcome {
    timed(K11N_LIMIT, || {
        let d = gen_k11n_oriented(3).map_err(|e| e.to_string())?;
        let diam = pair_diameter(&d).value;
        let chi = ochi_exact(&d, Budget::default());
        ensure(diam == Diameter::Finite(3), || format!("pair-diameter {diam}"))?;
        ensure(common::floyd_pair_diameter(&d) == Some(3), || "oracle disagrees".into())?;
        ensure(chi.completed && chi.value == 3, || format!("χo = {}", chi.value))?;
        Ok("K_{1,1,3}: pair-diameter 3, χo = 3".into())
    })
}

fn determinism() -> Outcome {
    timed(DETERMINISM_LIMIT, || {
        let run = |threads: Option<usize>| {
            let mut config = ExperimentConfig::new(3, 100, 1);
            config.threads = threads;
            run_experiment(&config).map(|r| (r.to_csv(), r.to_json())).map_err(|e| e.to_string())
        };
        let reference = run(None)?;
        for threads in [None, Some(1), Some(2), Some(4)] {
            ensure(run(threads)? == reference, || format!("output differs with threads {threads:?}"))?;
        }
        ensure(reference.0.lines().count() == 101, || "expected 100 CSV rows".into())?;
        Ok("d=3, 100 trials, seed 1: identical CSV and JSON over 5 runs, 1–4 threads".into())
    })
}

fn oracle_equivalence() -> Outcome {
    timed(ORACLE_LIMIT, || {
        let mut rng = SeededRng::new(RANDOM_SEED);
        for i in 0..RANDOM_GRAPHS {
            let n = 1 + rng.below(7) as usize;
            let d = common::random_oriented(n, &mut rng);
            let exact = ochi_exact(&d, Budget::default());
            let brute = common::brute_ochi(&d);
            ensure(exact.completed && exact.value == brute, || {
                format!("graph {i} (n = {n}, arcs {:?}): solver {}, brute force {brute}", d.arcs(), exact.value)
            })?;
            ensure(common::oriented_valid(&d, exact.witness.assignment()), || {
                format!("graph {i}: witness invalid")
            })?;
        }
        Ok(format!("{RANDOM_GRAPHS} random graphs, n ≤ 7, all agree"))
    })
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()))
}

#[test]
fn acceptance() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("1 regular oclique family", guarded(lemma2_family)));
    results.push(("2 constant √t0", guarded(constant)));
    let sweep = catch_unwind(sweep_corpus).unwrap_or_else(|_| Err("panicked".into()));
    match &sweep {
        Ok((sweeps, elapsed)) => {
            results.push(("3 χo = n iff pair-diameter ≤ 2", guarded(|| characterization(sweeps, *elapsed))));
            results.push(("4 counting bound on solved instances", guarded(|| counting_bound(sweeps))));
            results.push(("5 harmonious chain", guarded(|| chain(sweeps))));
        }
        Err(e) => {
            for name in ["3 χo = n iff pair-diameter ≤ 2", "4 counting bound on solved instances", "5 harmonious chain"] {
                results.push((name, Err(format!("corpus sweep failed: {e}"))));
            }
        }
    }
    results.push(("6 hypercube bracket", guarded(hypercubes)));
    results.push(("7 Q10 lower bounds", guarded(ksz_numerics)));
    results.push(("8 K_{1,1,3} example", guarded(k11n)));
    results.push(("9 experiment determinism", guarded(determinism)));
    results.push(("10 solver vs brute force", guarded(oracle_equivalence)));

    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => println!("FAIL criterion {name}: {detail}"),
        }
    }
    let failed: Vec<&str> = results.iter().filter(|(_, o)| o.is_err()).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
