use std::collections::BTreeSet;

use scss_core::approx::*;
use scss_core::graph::is_strongly_connected_subset;
use scss_core::instances::*;
use scss_core::{DiGraph, Rational};

/// The eight-vertex walkthrough graph, 1-based labels. The narration fixes
/// the DFS order; edges into 7 and 8 are chosen so that it is reproduced.
const WALKTHROUGH: [(usize, usize); 13] = [
    (1, 2),
    (1, 5),
    (2, 3),
    (3, 4),
    (3, 1),
    (4, 2),
    (5, 6),
    (6, 4),
    (6, 7),
    (6, 8),
    (7, 8),
    (7, 6),
    (8, 7),
];

#[derive(Default)]
struct Log {
    contractions: Vec<BTreeSet<(usize, usize)>>,
    non_tree: Vec<(usize, usize)>,
    bad_state: Option<String>,
}

impl DfsObserver for Log {
    fn event(&mut self, g: &DiGraph, event: DfsEvent<'_>, state: &DfsState) {
        let label = |e: &scss_core::EdgeId| {
            let (u, v) = g.edge(*e);
            (u + 1, v + 1)
        };
        match event {
            DfsEvent::Contracted(c) => self.contractions.push(c.iter().map(label).collect()),
            DfsEvent::NonTreeEdge(e) => {
                self.non_tree.push(label(&e));
                if self.bad_state.is_none() {
                    self.bad_state = state.check_invariants(g).err();
                }
            }
            _ => {}
        }
    }
}

#[test]
fn walkthrough_contracts_the_narrated_cycles() {
    let g = DiGraph::from_edges(8, WALKTHROUGH.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap();
    let mut log = Log::default();
    let (report, stats) = contract_cycles_3_fast_observed(&g, &mut log).unwrap();
    let expected: Vec<BTreeSet<(usize, usize)>> = vec![
        [(2, 3), (3, 4), (4, 2)].into(),
        [(3, 1), (1, 5), (5, 6), (6, 4)].into(),
        [(8, 7), (7, 6), (6, 8)].into(),
    ];
    assert_eq!(log.contractions, expected);
    assert_eq!(log.bad_state, None);
    assert_eq!(stats.contractions, 3);
    // Every remaining non-tree edge closed a 2-cycle: (3,1) before 1's
    // class met 5, and (8,7) and (7,6) inside the last triangle.
    assert_eq!(log.non_tree.len(), 6);
    assert_eq!(report.size, 10);
    assert!(is_strongly_connected_subset(&g, &report.kept).unwrap());
}

#[test]
fn threaded_cycles_replay_keeps_every_edge() {
    for k in 3..=5 {
        for groups in [2, 5, 20] {
            let f = gen_threaded_cycles(k, groups).unwrap();
            assert!(is_hamilton_cycle(&f.graph, &f.hamilton));
            let mut script = Scripted::new(f.script.clone());
            let run = contract_cycles_k_with(&f.graph, k, &mut script).unwrap();
            assert_eq!(run.report.size, f.graph.m(), "k={k} groups={groups}");
            let ratio = Rational::new(f.graph.m() as i128, f.n() as i128);
            assert_eq!(ratio, threaded_cycles_ratio(k, groups));
            let n = Rational::from_integer(f.n() as i128);
            let expected = Rational::from_integer(1) + Rational::new(k as i128, 2 * k as i128 - 2)
                - Rational::from_integer(2) / n;
            assert_eq!(ratio, expected);
        }
    }
}

#[test]
fn two_exchange_family_stable_solution() {
    for groups in [2, 3, 6] {
        let f = gen_two_exchange_worst(groups).unwrap();
        let stable = f.stable.clone().unwrap();
        assert!(is_strongly_connected_subset(&f.graph, &stable).unwrap());
        assert!(is_two_stable(&f.graph, &stable).unwrap());
        assert!(is_two_stable(&f.graph, &f.hamilton).unwrap());
        assert!(stable.len() > f.hamilton.len());
        let from_stable = k_exchange(&f.graph, 2, Some(&stable)).unwrap();
        assert_eq!(
            from_stable.size,
            stable.len(),
            "a stable start is a fixed point"
        );
    }
}
