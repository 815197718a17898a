use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scss_core::approx::*;
use scss_core::graph::*;
use scss_core::instances::gen_random_strong;
use scss_core::meg::{solve_meg, verify_equivalent};
use scss_core::oracle::*;
use scss_core::{DiGraph, EdgeId, Rational};

fn strong_graph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (2..=max_n, 0usize..=12, any::<u64>()).prop_map(|(n, extra, seed)| {
        let extra = extra.min(n * (n - 1) - n);
        gen_random_strong(n, extra, seed).unwrap()
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = DiGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=3 * n)
            .prop_map(move |edges| DiGraph::from_edges(n, edges).unwrap())
    })
}

fn opt(g: &DiGraph) -> usize {
    exact_scss(g).unwrap().len()
}

fn within(ratio: Rational, size: usize, opt: usize) -> bool {
    Rational::from_integer(size as i128) <= ratio * Rational::from_integer(opt as i128)
}

struct Invariants(Option<String>);

impl DfsObserver for Invariants {
    fn event(&mut self, g: &DiGraph, _: DfsEvent<'_>, state: &DfsState) {
        if self.0.is_none() {
            self.0 = state.check_invariants(g).err();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fast_cc3_is_strong_and_within_seven_quarters(g in strong_graph(8)) {
        let mut inv = Invariants(None);
        let (r, _) = contract_cycles_3_fast_observed(&g, &mut inv).unwrap();
        prop_assert_eq!(inv.0, None);
        prop_assert!(is_strongly_connected_subset(&g, &r.kept).unwrap());
        prop_assert!(within(Rational::new(7, 4), r.size, opt(&g)));
    }

    #[test]
    fn cc_k_is_strong_and_within_c_k(g in strong_graph(7), k in 2usize..=5) {
        let r = contract_cycles_k(&g, k).unwrap();
        prop_assert!(is_strongly_connected_subset(&g, &r.kept).unwrap());
        prop_assert!(within(c_k_guarantee(k).unwrap(), r.size, opt(&g)));
    }

    #[test]
    fn two_exchange_output_is_stable(g in strong_graph(7)) {
        let r = k_exchange(&g, 2, None).unwrap();
        prop_assert!(is_strongly_connected_subset(&g, &r.kept).unwrap());
        prop_assert!(is_two_stable(&g, &r.kept).unwrap());
        prop_assert!(within(Rational::new(7, 4), r.size, opt(&g)));
    }

    #[test]
    fn baselines_are_strong_and_minimal(g in strong_graph(8)) {
        let b = branching_baseline(&g, 0).unwrap();
        prop_assert!(is_strongly_connected_subset(&g, &b.kept).unwrap());
        prop_assert!(b.size <= 2 * g.n() - 2);
        let m = minimal_scss(&g).unwrap();
        prop_assert!(is_minimal(&g, &m.kept).unwrap());
    }

    #[test]
    fn exact_respects_lower_bounds(g in strong_graph(7)) {
        let o = opt(&g);
        let b = bound_report(&g, &OracleLimits::default()).unwrap();
        prop_assert!(o >= b.ceiling);
        prop_assert!(o >= g.n());
        let lb = cycle_lemma_bound(g.n(), b.max_cycle_len).unwrap();
        prop_assert!(Rational::from_integer(o as i128) >= lb);
    }

    #[test]
    fn contraction_never_raises_the_optimum(g in strong_graph(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<EdgeId> = g.edge_ids().collect();
        ids.shuffle(&mut rng);
        ids.truncate(ids.len() / 3);
        prop_assert!(contraction_bound_check(&g, &ids, &OracleLimits::default()).unwrap());
    }

    #[test]
    fn contraction_is_order_independent(g in any_graph(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<EdgeId> = g.edge_ids().filter(|e| e.0 % 2 == 0).collect();
        let a = contract(&g, &ids).unwrap().quotient(&g);
        ids.shuffle(&mut rng);
        let b = contract(&g, &ids).unwrap().quotient(&g);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scc_matches_mutual_reachability(g in any_graph(9)) {
        let c = scc(&g);
        let fwd: Vec<Vec<bool>> = (0..g.n()).map(|v| reachable_from(&g, v)).collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(c.comp[u] == c.comp[v], fwd[u][v] && fwd[v][u]);
            }
        }
        prop_assert!(c.condensation.is_acyclic());
        prop_assert_eq!(c.is_single(), is_strongly_connected(&g) || g.n() <= 1);
    }

    #[test]
    fn meg_preserves_reachability(g in any_graph(8)) {
        for alg in [Algorithm::Cc3Fast, Algorithm::TwoExchange, Algorithm::Exact] {
            let sol = solve_meg(&g, alg).unwrap();
            prop_assert!(verify_equivalent(&g, &sol.kept).unwrap());
            let closure = reachability_closure(&g).unwrap();
            let (h, _) = g.spanning_subgraph(&sol.kept).unwrap();
            prop_assert_eq!(closure.first_difference(&reachability_closure(&h).unwrap()), None);
        }
        let best = exact_meg(&g, &OracleLimits::default()).unwrap();
        let fast = solve_meg(&g, Algorithm::Cc3Fast).unwrap();
        prop_assert!(best.len() <= fast.kept.len());
    }

    #[test]
    fn graph_text_round_trip(g in any_graph(10)) {
        let mut out = Vec::new();
        write_graph(&g, &mut out).unwrap();
        let back = parse_graph(std::str::from_utf8(&out).unwrap()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edge_pairs(), g.edge_pairs());
    }
}
