mod common;

use ochromatic::bounds::{bounds_report, ksz_lower, solve_t, T_RESIDUAL_TOLERANCE};
use ochromatic::chromatic::{
    harmonious_exact, is_oriented_colouring, ochi_exact, ochi_graph_exact, ochi_heuristic, Budget,
};
use ochromatic::graph::io::{parse_graph, write_oriented, write_undirected, GraphFile};
use ochromatic::graph::{enumerate_orientations, gen_hypercube, orient_bits, OrientedGraph, UndirectedGraph};
use ochromatic::oclique::{moore_check, pair_diameter, Diameter};
use ochromatic::rng::SeededRng;
use proptest::prelude::*;

fn undirected(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| UndirectedGraph::new(n, &edges).unwrap())
    })
}

fn oriented(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| common::random_oriented(n, &mut SeededRng::new(seed)))
}

fn with_perm<T: std::fmt::Debug + Clone>(g: impl Strategy<Value = T>, n: fn(&T) -> usize) -> impl Strategy<Value = (T, Vec<usize>)> {
    g.prop_flat_map(move |g| {
        let size = n(&g);
        (Just(g), Just((0..size).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in undirected(12)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn orienting_keeps_the_underlying_graph(g in undirected(9), bits in any::<u64>()) {
        let mask = bits & ((1u64 << g.m()) - 1);
        let d = orient_bits(&g, mask).unwrap();
        prop_assert_eq!(d.underlying(), g);
    }

    #[test]
    fn text_roundtrip(g in undirected(10), seed in any::<u64>()) {
        let text = write_undirected(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), GraphFile::Undirected(g.clone()));
        let d = common::random_oriented(g.n(), &mut SeededRng::new(seed));
        let text = write_oriented(&d);
        prop_assert_eq!(parse_graph(&text).unwrap(), GraphFile::Oriented(d));
    }

    #[test]
    fn pair_diameter_matches_floyd_and_relabelling((d, perm) in with_perm(oriented(9), |d: &OrientedGraph| d.n())) {
        let value = pair_diameter(&d).value;
        let expected = match common::floyd_pair_diameter(&d) {
            Some(k) => Diameter::Finite(k),
            None => Diameter::Infinite,
        };
        prop_assert_eq!(value, expected);
        prop_assert_eq!(pair_diameter(&d.relabel(&perm)).value, value);
    }

    #[test]
    fn exact_is_invariant_under_relabelling_and_reversal((d, perm) in with_perm(oriented(7), |d: &OrientedGraph| d.n())) {
        let chi = ochi_exact(&d, Budget::default());
        prop_assert!(chi.completed);
        prop_assert!(is_oriented_colouring(&d, &chi.witness).unwrap());
        prop_assert_eq!(ochi_exact(&d.relabel(&perm), Budget::default()).value, chi.value);
        prop_assert_eq!(ochi_exact(&d.reversed(), Budget::default()).value, chi.value);
        let heuristic = ochi_heuristic(&d, 7);
        prop_assert!(heuristic.value >= chi.value);
        prop_assert!(is_oriented_colouring(&d, &heuristic.witness).unwrap());
        prop_assert_eq!(chi.value == d.n(), pair_diameter(&d).value.is_at_most(2));
    }

    #[test]
    fn harmonious_matches_brute_force_and_is_oriented(g in undirected(6)) {
        let h = harmonious_exact(&g, Budget::default()).unwrap();
        prop_assert!(h.completed);
        prop_assert_eq!(h.value, common::brute_harmonious(&g));
        for (_, d) in enumerate_orientations(&g).unwrap() {
            prop_assert!(is_oriented_colouring(&d, &h.witness).unwrap());
        }
    }

    #[test]
    fn moore_bound_never_fails(g in undirected(10)) {
        prop_assert!(moore_check(&g));
    }

    #[test]
    fn bracket_contains_exact_value(g in undirected(6)) {
        let exact = ochi_graph_exact(&g, Budget::default()).unwrap();
        prop_assert!(exact.completed);
        let report = bounds_report(&g, None).unwrap();
        prop_assert!(report.bracket.lo <= exact.value, "{} > {}", report.bracket.lo, exact.value);
        prop_assert!(exact.value <= report.bracket.hi, "{} > {}", exact.value, report.bracket.hi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn t_root_residual_and_monotonicity(n in 2usize..=1_000_000, num in 0u64..=u64::MAX) {
        let max_m = n * (n - 1) / 2;
        let m = (num % (max_m as u64 + 1)) as usize;
        let s = solve_t(n, m);
        prop_assert!(s.residual <= T_RESIDUAL_TOLERANCE, "n={} m={} residual {:e}", n, m, s.residual);
        prop_assert!((s.t - common::t_oracle(s.rhs)).abs() <= 1e-9 * s.t.max(1.0));
        if m < max_m {
            prop_assert!(solve_t(n, m + 1).t >= s.t);
        }
    }

    #[test]
    fn counting_bound_is_least(n in 1usize..=5000, m in 0usize..=200_000) {
        prop_assert_eq!(ksz_lower(n, m), common::ksz_scan(n, m));
    }
}

#[test]
fn graph_level_q3_agrees_with_sweep() {
    let q3 = gen_hypercube(3).unwrap();
    let sweep = enumerate_orientations(&q3)
        .unwrap()
        .map(|(_, d)| ochi_exact(&d, Budget::default()).value)
        .max()
        .unwrap();
    let graph = ochi_graph_exact(&q3, Budget::default()).unwrap();
    assert!(graph.completed);
    assert_eq!(graph.value, sweep);
    let d = orient_bits(&q3, graph.orientation.unwrap()).unwrap();
    assert_eq!(ochi_exact(&d, Budget::default()).value, sweep);
}
