//! Acceptance criteria, one PASS/FAIL line each.
//!
//! `cargo test -p scss-core --test acceptance` runs all ten; pass criterion
//! numbers after `--` to run a subset.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scss_core::approx::*;
use scss_core::graph::{is_strongly_connected, is_strongly_connected_subset};
use scss_core::instances::*;
use scss_core::meg::{solve_meg_with, transitive_reduction, verify_equivalent};
use scss_core::oracle::*;
use scss_core::{DiGraph, EdgeId, Rational};

// Pinned tolerances and sample sizes.
const ENVELOPE_SMALL_INSTANCES: usize = 2000;
const ENVELOPE_SMALL_MAX_N: usize = 7;
const ENVELOPE_MEDIUM_INSTANCES: usize = 500;
const ENVELOPE_MEDIUM_MAX_N: usize = 9;
const ENVELOPE_TIME_LIMIT: Duration = Duration::from_secs(120);
const ENVELOPE_KS: [usize; 4] = [2, 3, 4, 5];
const INVARIANT_INSTANCES: usize = 200;
const SCALING_LADDER: [usize; 3] = [10_000, 100_000, 1_000_000];
const SCALING_RUNS: usize = 3;
const SCALING_MAX_SPREAD: f64 = 4.0;
const SCALING_TOP_LIMIT: Duration = Duration::from_secs(10);
const REPLAY_KS: [usize; 3] = [3, 4, 5];
const REPLAY_GROUPS: [usize; 3] = [2, 10, 100];
const LBOUND2_GROUPS: [usize; 4] = [2, 3, 5, 10];
const BOUND_INSTANCES: usize = 500;
const BOUND_MAX_N: usize = 8;
const TIGHT_LENGTHS: [usize; 3] = [2, 3, 4];
const DAG_INSTANCES: usize = 300;
const MIXED_INSTANCES: usize = 200;
const MEG_MAX_N: usize = 9;
const EXHAUSTIVE_MAX_M: usize = 16;
const SAT_MAX_VARS: usize = 3;
const SAT_MAX_CLAUSES: usize = 3;
const SAT_MAX_CYCLE: usize = 5;
const VC_MAX_EDGES: usize = 4;
const VC_RANDOM_INSTANCES: usize = 50;
const VC_MAX_CYCLE: usize = 17;
const VC_MAX_COLORS: usize = 8;

type Outcome = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn big_limits() -> OracleLimits {
    OracleLimits::default()
        .with_exact_max_n(LONGEST_CYCLE_HARD_MAX)
        .with_longest_cycle_max_n(LONGEST_CYCLE_HARD_MAX)
}

fn c_k(k: usize) -> Rational {
    // Independent of the library: 1/(k-1) + sum_{i<k} 1/i^2.
    let mut r = Rational::new(1, k as i128 - 1);
    for i in 1..k as i128 {
        r += Rational::new(1, i * i);
    }
    r
}

fn ceil_times(r: Rational, x: usize) -> usize {
    (r * Rational::from_integer(x as i128)).ceil().to_integer() as usize
}

/// Strongly connected oracle-sized graphs with their exact optima.
struct Sample {
    graph: DiGraph,
    opt: usize,
}

fn envelope_corpus() -> &'static [Sample] {
    static CORPUS: OnceLock<Vec<Sample>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let densities = [0.2, 0.3, 0.45, 0.6, 0.8];
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut seed = 0u64;
        let mut push = |n: usize, seed: u64, out: &mut Vec<Sample>| {
            let p = densities[(seed % densities.len() as u64) as usize];
            let g = gen_random_strong_sampled(n, p, seed).unwrap();
            if !seen.insert((g.n(), g.edge_pairs().to_vec())) {
                return false;
            }
            let opt = exact_scss(&g).unwrap().len();
            out.push(Sample { graph: g, opt });
            true
        };
        while out.len() < ENVELOPE_SMALL_INSTANCES {
            let n = 2 + (seed as usize % (ENVELOPE_SMALL_MAX_N - 1));
            push(n, seed, &mut out);
            seed += 1;
        }
        let mut added = 0;
        while added < ENVELOPE_MEDIUM_INSTANCES {
            let n = ENVELOPE_SMALL_MAX_N
                + 1
                + (seed as usize % (ENVELOPE_MEDIUM_MAX_N - ENVELOPE_SMALL_MAX_N));
            if push(n, seed, &mut out) {
                added += 1;
            }
            seed += 1;
        }
        out
    })
}

/// Counts outputs that are not spanning SCSSs or exceed `ceil(gamma * opt)`.
fn envelope<F>(gamma: Rational, mut solve: F) -> Result<usize, String>
where
    F: FnMut(&DiGraph) -> SolveReport,
{
    let mut violations = 0;
    for s in envelope_corpus() {
        let r = solve(&s.graph);
        let ok = is_strongly_connected_subset(&s.graph, &r.kept).unwrap()
            && r.size >= s.opt
            && r.size <= ceil_times(gamma, s.opt);
        if !ok {
            if violations < 3 {
                eprintln!(
                    "  violation: {} on {:?}: size {} opt {}",
                    r.algorithm, s.graph, r.size, s.opt
                );
            }
            violations += 1;
        }
    }
    Ok(violations)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let count = envelope_corpus().len();
    let mut total = 0;
    for k in ENVELOPE_KS {
        let gamma = c_k(k);
        if c_k_guarantee(k).unwrap() != gamma {
            return Err(format!("c_{k} mismatch"));
        }
        total += envelope(gamma, |g| contract_cycles_k(g, k).unwrap())?;
    }
    if c_k(3) != Rational::new(7, 4) || c_k(4) != Rational::new(61, 36) {
        return Err("c_3 or c_4 has the wrong value".into());
    }
    let took = start.elapsed();
    let detail = format!("{count} instances, k in {ENVELOPE_KS:?}, {total} violations, {took:.1?}");
    if total == 0 && took < ENVELOPE_TIME_LIMIT {
        Ok(detail)
    } else {
        Err(detail)
    }
}

struct InvariantChecker {
    events: usize,
    failures: Vec<String>,
}

impl DfsObserver for InvariantChecker {
    fn event(&mut self, g: &DiGraph, _event: DfsEvent<'_>, state: &DfsState) {
        self.events += 1;
        if let Err(e) = state.check_invariants(g) {
            self.failures.push(e);
        }
    }
}

fn criterion_2() -> Outcome {
    let violations = envelope(Rational::new(7, 4), |g| contract_cycles_3_fast(g).unwrap())?;
    let mut checker = InvariantChecker {
        events: 0,
        failures: Vec::new(),
    };
    let mut r = rng(2);
    for i in 0..INVARIANT_INSTANCES {
        let n = r.gen_range(2..=60);
        let g = if i % 2 == 0 {
            gen_random_strong(n, r.gen_range(0..=(2 * n).min(n * (n - 2))), r.gen()).unwrap()
        } else {
            gen_random_strong_sampled(n.min(25), r.gen_range(0.25..0.6), r.gen()).unwrap()
        };
        let (rep, _) = contract_cycles_3_fast_observed(&g, &mut checker).unwrap();
        if !is_strongly_connected_subset(&g, &rep.kept).unwrap() {
            checker
                .failures
                .push(format!("output not strongly connected on {g:?}"));
        }
    }
    let detail = format!(
        "{violations} envelope violations, {} invariant failures over {} DFS events",
        checker.failures.len(),
        checker.events
    );
    if let Some(f) = checker.failures.first() {
        eprintln!("  first invariant failure: {f}");
    }
    if violations == 0 && checker.failures.is_empty() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn criterion_3() -> Outcome {
    let mut per_edge = Vec::new();
    let mut top = Duration::ZERO;
    let mut parts = Vec::new();
    for (i, &m) in SCALING_LADDER.iter().enumerate() {
        let n = m / 4;
        let g = gen_random_strong(n, m - n, 1000 + i as u64).unwrap();
        assert_eq!(g.m(), m);
        // One untimed warm-up run, then the timed ones.
        contract_cycles_3_fast(&g).unwrap();
        let mut runs = Vec::new();
        for _ in 0..SCALING_RUNS {
            let t = Instant::now();
            let rep = contract_cycles_3_fast(&g).unwrap();
            runs.push(t.elapsed());
            assert!(rep.size <= 2 * n - 2);
        }
        let med = median(runs);
        per_edge.push(med.as_secs_f64() / m as f64);
        parts.push(format!(
            "m={m}: {med:.1?} ({:.1} ns/edge)",
            1e9 * med.as_secs_f64() / m as f64
        ));
        top = med;
    }
    let spread = per_edge.iter().cloned().fold(f64::MIN, f64::max)
        / per_edge.iter().cloned().fold(f64::MAX, f64::min);
    let detail = format!("{}; spread {spread:.2}x", parts.join(", "));
    if spread < SCALING_MAX_SPREAD && top < SCALING_TOP_LIMIT {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for k in REPLAY_KS {
        for groups in REPLAY_GROUPS {
            let f = gen_threaded_cycles(k, groups).unwrap();
            let n = f.n();
            if !is_hamilton_cycle(&f.graph, &f.hamilton) {
                return Err(format!("k={k} groups={groups}: no Hamilton cycle"));
            }
            let mut script = Scripted::new(f.script.clone());
            let run = contract_cycles_k_with(&f.graph, k, &mut script).unwrap();
            let long: Vec<_> = run.steps.iter().filter(|s| s.cycle.len() > 2).collect();
            if script.remaining() != 0
                || long.len() != groups
                || long.iter().any(|s| s.cycle.len() != k)
            {
                return Err(format!(
                    "k={k} groups={groups}: replay did not follow the script"
                ));
            }
            let ratio = Rational::new(run.report.size as i128, n as i128);
            let expected = Rational::from_integer(1) + Rational::new(k as i128, 2 * k as i128 - 2)
                - Rational::new(2, n as i128);
            if ratio != expected || threaded_cycles_ratio(k, groups) != expected {
                return Err(format!(
                    "k={k} groups={groups}: ratio {ratio}, expected {expected}"
                ));
            }
            checked += 1;
        }
    }
    let f = gen_threaded_cycles(3, 100).unwrap();
    let mut script = Scripted::new(f.script.clone());
    let size = contract_cycles_k_with(&f.graph, 3, &mut script)
        .unwrap()
        .report
        .size;
    let r = Rational::new(size as i128, f.n() as i128);
    if r != Rational::new(1745, 1000) {
        return Err(format!("k=3 groups=100 gives {r}"));
    }
    Ok(format!(
        "{checked} replays exact; k=3 groups=100 ratio {} = {}",
        r,
        r.to_f64().unwrap()
    ))
}

fn criterion_5() -> Outcome {
    let violations = envelope(Rational::new(7, 4), |g| k_exchange(g, 2, None).unwrap())?;
    let mut problems = Vec::new();
    let mut shown = Vec::new();
    for groups in LBOUND2_GROUPS {
        let f = gen_two_exchange_worst(groups).unwrap();
        let n = f.n();
        let stable = f.stable.clone().unwrap();
        if !is_hamilton_cycle(&f.graph, &f.hamilton) {
            problems.push(format!("groups={groups}: recorded Hamilton cycle invalid"));
        }
        if !is_strongly_connected_subset(&f.graph, &stable).unwrap()
            || !is_two_stable(&f.graph, &stable).unwrap()
        {
            problems.push(format!("groups={groups}: recorded solution not 2-stable"));
        }
        let target = Rational::new(7 * n as i128, 4);
        let ratio = Rational::new(stable.len() as i128, n as i128);
        shown.push(format!("n={n} size={} ratio={ratio}", stable.len()));
        if Rational::from_integer(stable.len() as i128) != target {
            problems.push(format!(
                "groups={groups}: size {} != 7n/4 = {target}",
                stable.len()
            ));
        }
        if ratio < Rational::new(7, 4) {
            problems.push(format!("groups={groups}: ratio {ratio} < 7/4"));
        }
    }
    let detail = format!(
        "(a) {violations} envelope violations; (b) {}",
        shown.join(", ")
    );
    if violations == 0 && problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", problems.join("; ")))
    }
}

fn criterion_6() -> Outcome {
    let limits = OracleLimits::default();
    let mut graphs: Vec<DiGraph> = vec![
        DiGraph::from_edges(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)]).unwrap(),
        DiGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap(),
        DiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
    ];
    let mut r = rng(6);
    while graphs.len() < BOUND_INSTANCES {
        let n = r.gen_range(2..=BOUND_MAX_N);
        graphs.push(gen_random_strong_sampled(n, r.gen_range(0.15..0.7), r.gen()).unwrap());
    }
    let mut unsound = 0;
    let mut lemma_failures = 0;
    let mut tight = [false; 3];
    for g in &graphs {
        let opt = exact_scss_with(g, &limits).unwrap().len();
        let b = bound_report(g, &limits).unwrap();
        let independent = Rational::new(b.max_cycle_len as i128, b.max_cycle_len as i128 - 1)
            * Rational::from_integer(g.n() as i128 - 1);
        if b.ceiling > opt || b.ceiling < g.n() || independent.ceil().to_integer() as usize > opt {
            unsound += 1;
        }
        if let Some(i) = TIGHT_LENGTHS.iter().position(|&l| l == b.max_cycle_len) {
            tight[i] |= independent.ceil().to_integer() as usize == opt;
        }
        let s: Vec<EdgeId> = g.edge_ids().filter(|_| r.gen_bool(0.3)).collect();
        if !contraction_bound_check(g, &s, &limits).unwrap() {
            lemma_failures += 1;
        }
    }
    let detail = format!(
        "{} instances, {unsound} unsound bounds, {lemma_failures} contraction failures, tight for l={TIGHT_LENGTHS:?}: {tight:?}",
        graphs.len()
    );
    if unsound == 0 && lemma_failures == 0 && tight.iter().all(|&t| t) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Reachability rows as bitmasks, restricted to edges in `mask`.
fn closure(n: usize, edges: &[(usize, usize)], mask: u32) -> Vec<u16> {
    let mut reach: Vec<u16> = (0..n).map(|v| 1 << v).collect();
    loop {
        let mut changed = false;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let next = reach[u] | reach[v];
                if next != reach[u] {
                    reach[u] = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return reach;
        }
    }
}

/// All minimum reachability-preserving edge subsets, by full enumeration.
fn exhaustive_meg(g: &DiGraph) -> (usize, Vec<u32>) {
    let m = g.m();
    assert!(m <= EXHAUSTIVE_MAX_M);
    let edges = g.edge_pairs();
    let full = closure(g.n(), edges, (1u32 << m) - 1);
    let mut best = usize::MAX;
    let mut sets = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size > best || closure(g.n(), edges, mask) != full {
            continue;
        }
        if size < best {
            best = size;
            sets.clear();
        }
        sets.push(mask);
    }
    (best, sets)
}

fn to_mask(kept: &[EdgeId]) -> u32 {
    kept.iter().fold(0, |acc, e| acc | 1 << e.0)
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut dag_mismatch = 0;
    let mut dags = 0;
    while dags < DAG_INSTANCES {
        let n = r.gen_range(1..=MEG_MAX_N);
        let g = gen_random_dag(n, r.gen_range(0.1..0.8), r.gen());
        if g.m() > EXHAUSTIVE_MAX_M {
            continue;
        }
        dags += 1;
        let (best, sets) = exhaustive_meg(&g);
        let tr = transitive_reduction(&g).unwrap();
        if sets.len() != 1 || tr.len() != best || to_mask(&tr) != sets[0] {
            dag_mismatch += 1;
        }
    }
    let mut mixed_mismatch = 0;
    let mut mixed = 0;
    let limits = OracleLimits::default();
    while mixed < MIXED_INSTANCES {
        let n = r.gen_range(2..=MEG_MAX_N);
        let g = gen_random_digraph(n, r.gen_range(0.1..0.4), r.gen());
        if g.m() > EXHAUSTIVE_MAX_M || is_strongly_connected(&g) && g.n() > 2 && mixed % 4 != 0 {
            continue;
        }
        mixed += 1;
        let (best, sets) = exhaustive_meg(&g);
        let sol = solve_meg_with(&g, Algorithm::Exact, &limits).unwrap();
        if sol.size() != best
            || !sets.contains(&to_mask(&sol.kept))
            || !verify_equivalent(&g, &sol.kept).unwrap()
        {
            mixed_mismatch += 1;
        }
    }
    let detail = format!(
        "{dag_mismatch} DAG mismatches / {DAG_INSTANCES}, {mixed_mismatch} mixed mismatches / {MIXED_INSTANCES}"
    );
    if dag_mismatch == 0 && mixed_mismatch == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Every non-empty clause over `vars` variables, tautologies included.
fn all_clauses(vars: usize) -> Vec<Vec<i32>> {
    let lits: Vec<i32> = (1..=vars as i32).flat_map(|v| [v, -v]).collect();
    (1u32..1 << lits.len())
        .map(|mask| {
            (0..lits.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| lits[i])
                .collect()
        })
        .collect()
}

/// Multisets of `1..=max` clauses, as index lists in non-decreasing order.
fn clause_multisets(count: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(count: usize, max: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in from..count {
            cur.push(i);
            rec(count, max, i, cur, out);
            cur.pop();
        }
    }
    rec(count, max, 0, &mut cur, &mut out);
    out
}

fn brute_sat(f: &CnfFormula) -> bool {
    (0u32..1 << f.vars).any(|mask| {
        f.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| (mask >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
        })
    })
}

fn criterion_8() -> Outcome {
    let limits = big_limits();
    let mut formulas = 0;
    let mut mismatches = 0;
    let mut long_cycles = 0;
    let mut satisfiable = 0;
    for vars in 1..=SAT_MAX_VARS {
        let clauses = all_clauses(vars);
        for pick in clause_multisets(clauses.len(), SAT_MAX_CLAUSES) {
            let f =
                CnfFormula::new(vars, pick.iter().map(|&i| clauses[i].clone()).collect()).unwrap();
            formulas += 1;
            let inst = reduce_sat_to_scss5(&f).unwrap();
            let n = inst.graph.n();
            let d = inst.graph.out_degree(SAT_ROOT);
            let opt = exact_scss_with(&inst.graph, &limits).unwrap();
            let sat = brute_sat(&f);
            satisfiable += sat as usize;
            if sat != (opt.len() == n - 1 + d) || opt.len() < n - 1 + d {
                mismatches += 1;
                if mismatches <= 3 {
                    eprintln!(
                        "  mismatch on {:?}: opt {} target {}",
                        f.clauses,
                        opt.len(),
                        n - 1 + d
                    );
                }
            } else if sat {
                let a = inst.scss_to_assignment(&opt).unwrap();
                let back = inst.assignment_to_scss(&a).unwrap();
                if !f.is_satisfied_by(&a) || back.len() != n - 1 + d {
                    mismatches += 1;
                }
            }
            if longest_cycle_with(&inst.graph, &limits).unwrap() > SAT_MAX_CYCLE {
                long_cycles += 1;
            }
        }
    }
    let detail = format!(
        "{formulas} formulas ({satisfiable} satisfiable), {mismatches} mismatches, {long_cycles} with a cycle longer than {SAT_MAX_CYCLE}"
    );
    if mismatches == 0 && long_cycles == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn brute_vc(g: &UGraph) -> usize {
    (0u32..1 << g.n())
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Connected graphs with `1..=max_edges` edges and no isolated vertex, on
/// vertex sets `0..n`.
fn small_connected_graphs(max_edges: usize) -> Vec<UGraph> {
    let mut out = Vec::new();
    for n in 2..=max_edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 1u32..1 << pairs.len() {
            let m = mask.count_ones() as usize;
            if m > max_edges || m + 1 < n {
                continue;
            }
            let edges = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i]);
            let g = UGraph::new(n, edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let limits = big_limits();
    let mut graphs = small_connected_graphs(VC_MAX_EDGES);
    let enumerated = graphs.len();
    let mut r = rng(9);
    while graphs.len() < enumerated + VC_RANDOM_INSTANCES {
        let n = r.gen_range(3..=8);
        let g = gen_random_connected_ugraph(n, r.gen_range(0..=3), 7, r.gen()).unwrap();
        if 2 * g.m() + 1 <= 19 {
            graphs.push(g);
        }
    }
    let (mut mismatches, mut long_cycles, mut bad_colors) = (0, 0, 0);
    for g in &graphs {
        let inst = reduce_vc_to_scss17(g, None).unwrap();
        let d = &inst.graph;
        let s = brute_vc(g);
        let opt = exact_scss_with(d, &limits).unwrap();
        let cover = inst.scss_to_cover(&opt).unwrap();
        let from_cover = inst.cover_to_scss(&cover).unwrap();
        if d.n() != 2 * g.m() + 1
            || opt.len() != 2 * g.m() + s
            || cover.len() != s
            || from_cover.len() != opt.len()
            || !is_strongly_connected_subset(d, &from_cover).unwrap()
        {
            mismatches += 1;
            if mismatches <= 3 {
                eprintln!(
                    "  mismatch on {:?}: opt {} expected {}",
                    g.edges(),
                    opt.len(),
                    2 * g.m() + s
                );
            }
        }
        if longest_cycle_with(d, &limits).unwrap() > VC_MAX_CYCLE {
            long_cycles += 1;
        }
        if inst.colors_used() > VC_MAX_COLORS || !is_proper_coloring(g, &inst.colors) {
            bad_colors += 1;
        }
    }
    let detail = format!(
        "{enumerated} enumerated + {VC_RANDOM_INSTANCES} random graphs, {mismatches} mismatches, {long_cycles} with a cycle longer than {VC_MAX_CYCLE}, {bad_colors} bad colorings"
    );
    if mismatches + long_cycles + bad_colors == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn deletion_minimal(g: &DiGraph, kept: &[EdgeId]) -> bool {
    (0..kept.len()).all(|i| {
        let mut rest = kept.to_vec();
        rest.remove(i);
        !is_strongly_connected_subset(g, &rest).unwrap()
    })
}

fn criterion_10() -> Outcome {
    let mut corpus: Vec<DiGraph> = envelope_corpus().iter().map(|s| s.graph.clone()).collect();
    let mut r = rng(10);
    for _ in 0..100 {
        let n = r.gen_range(10..=300);
        corpus.push(gen_random_strong(n, r.gen_range(0..=3 * n), r.gen()).unwrap());
    }
    for k in REPLAY_KS {
        corpus.push(gen_threaded_cycles(k, 10).unwrap().graph);
    }
    corpus.push(gen_two_exchange_worst(10).unwrap().graph);
    let sat = CnfFormula::new(3, vec![vec![1, -2], vec![2, 3], vec![-1, -3]]).unwrap();
    corpus.push(reduce_sat_to_scss5(&sat).unwrap().graph);
    let tri = UGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    corpus.push(reduce_vc_to_scss17(&tri, None).unwrap().graph);

    let mut failures = 0;
    for g in &corpus {
        let limit = 2 * g.n() - 2;
        let b = branching_baseline(g, 0).unwrap();
        let m = minimal_scss(g).unwrap();
        let ok = is_strongly_connected_subset(g, &b.kept).unwrap()
            && b.size <= limit
            && is_strongly_connected_subset(g, &m.kept).unwrap()
            && m.size <= limit
            && deletion_minimal(g, &m.kept);
        failures += !ok as usize;
    }
    let detail = format!("{} instances, {failures} failures", corpus.len());
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

const CRITERIA: [(&str, fn() -> Outcome); 10] = [
    ("guarantee envelope of cycle contraction", criterion_1),
    ("fast cc3 envelope and DFS invariants", criterion_2),
    ("near-linear scaling of fast cc3", criterion_3),
    ("threaded-cycles adversarial replay", criterion_4),
    ("2-exchange envelope and tight family", criterion_5),
    ("cycle and contraction lower bounds", criterion_6),
    ("acyclic and mixed MEG exactness", criterion_7),
    ("SAT reduction correspondence", criterion_8),
    ("vertex cover reduction correspondence", criterion_9),
    ("baselines within 2n-2 and minimal", criterion_10),
];

fn main() {
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    panic::set_hook(Box::new(|info| eprintln!("  panic: {info}")));
    let mut failed = 0;
    let mut ran = 0;
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    println!("acceptance: {} of {ran} criteria passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
