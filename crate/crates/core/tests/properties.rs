//! Randomised invariants of the burning process, the search, the gadgets and
//! the text formats.

use graphburn::burning::{clusters, greedy_burn, random_schedule, simulate, verify_schedule};
use graphburn::exact::{exact_burning_number, lower_bound};
use graphburn::graph::{
    build_path_forest, build_permutation_graph, Interval, IntervalRepresentation,
};
use graphburn::grid::{grid_lower_bound, max_burnable, max_burnable_recurrence, GridSpec};
use graphburn::io;
use graphburn::partition::{random_solvable_instance, solve_3partition, verify_partition};
use graphburn::reduction::forest_permutation;
use graphburn::{BurningSchedule, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.3), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Component orders of the graph on `perm`, sorted.
fn component_orders(perm: &[usize]) -> Vec<usize> {
    let g = build_permutation_graph(perm.len(), perm).unwrap();
    let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

fn is_path_forest(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let max_deg = c.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
        let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        max_deg <= 2 && edges + 1 == c.len()
    })
}

#[test]
fn forest_permutation_small_lengths_exhaustive() {
    for a in 1..=9 {
        for b in 1..=9 {
            let (perm, plan) = forest_permutation(&[a, b]).unwrap();
            assert_eq!(plan.total(), a + b);
            let g = build_permutation_graph(perm.len(), &perm).unwrap();
            assert!(is_path_forest(&g));
            let mut want = vec![a, b];
            want.sort_unstable();
            assert_eq!(component_orders(&perm), want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn forest_permutation_realises_the_lengths(lengths in proptest::collection::vec(1usize..40, 1..8)) {
        let (perm, _) = forest_permutation(&lengths).unwrap();
        let g = build_permutation_graph(perm.len(), &perm).unwrap();
        prop_assert!(is_path_forest(&g));
        let mut want = lengths.clone();
        want.sort_unstable();
        prop_assert_eq!(component_orders(&perm), want);
        // same component structure as the plain path forest
        let plain = build_path_forest(&lengths).unwrap();
        prop_assert_eq!(plain.edge_count(), g.edge_count());
    }

    #[test]
    fn graph_text_round_trips(g in graph_strategy(20)) {
        prop_assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g.clone());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn schedule_text_round_trips(vs in proptest::collection::vec(0usize..1000, 1..30)) {
        let s = BurningSchedule::new(vs);
        prop_assert_eq!(io::parse_schedule(&io::write_schedule(&s)).unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<BurningSchedule>(&json).unwrap(), s);
    }

    #[test]
    fn interval_text_round_trips(raw in proptest::collection::vec((-500i64..500, 0i64..50), 1..30)) {
        let rep = IntervalRepresentation::new(
            raw.iter().map(|&(l, w)| Interval::new(l, l + w)).collect(),
        ).unwrap();
        prop_assert_eq!(io::parse_intervals(&io::write_intervals(&rep)).unwrap(), rep);
    }

    #[test]
    fn permutation_text_round_trips(seed in any::<u64>(), n in 1usize..60) {
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(io::parse_permutation(&io::write_permutation(&p)).unwrap(), p);
    }

    #[test]
    fn legal_schedules_grow_monotonically(g in graph_strategy(18), seed in any::<u64>(), len in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_schedule(&g, &mut rng, len);
        let out = simulate(&g, &s).unwrap();
        for w in out.burned_by_round.windows(2) {
            prop_assert!(w[0].is_subset(&w[1]));
        }
        // full burn after the last round is exactly the cluster cover
        prop_assert_eq!(out.complete, verify_schedule(&g, &s).unwrap());
        prop_assert_eq!(clusters(&g, &s).unwrap().union().len(), out.final_burned().len());
    }

    #[test]
    fn greedy_is_legal_and_bounds_the_optimum(g in graph_strategy(10)) {
        let s = greedy_burn(&g);
        let out = simulate(&g, &s).unwrap();
        prop_assert!(out.complete);
        let exact = exact_burning_number(&g).unwrap();
        prop_assert!(lower_bound(&g).unwrap() <= exact.k);
        prop_assert!(exact.k <= s.len());
        prop_assert!(verify_schedule(&g, &exact.witness).unwrap());
    }

    #[test]
    fn burning_number_ignores_labels(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&map).unwrap();
        prop_assert_eq!(exact_burning_number(&g).unwrap().k, exact_burning_number(&h).unwrap().k);
    }

    #[test]
    fn solver_output_always_verifies(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some((inst, planted)) = random_solvable_instance(&mut rng, n, 60) {
            prop_assert!(verify_partition(&inst, &planted));
            let found = solve_3partition(&inst, u64::MAX).unwrap().expect("planted solution exists");
            prop_assert!(verify_partition(&inst, &found));
        }
    }

    #[test]
    fn grid_closed_form_matches_recurrence(k in 1u64..5000) {
        prop_assert_eq!(max_burnable(k).unwrap(), max_burnable_recurrence(k).unwrap());
    }

    #[test]
    fn grid_lower_bound_is_monotone_in_area(l in 1usize..2000, b in 1usize..2000) {
        let lb = grid_lower_bound(GridSpec::new(l, b).unwrap());
        prop_assert!(lb <= grid_lower_bound(GridSpec::new(l + 1, b).unwrap()));
        prop_assert_eq!(lb, grid_lower_bound(GridSpec::new(b, l).unwrap()));
    }
}
