use std::time::Instant;

use super::{cycle_lemma_bound, longest_cycle_with, OracleLimits};
use crate::approx::Algorithm;
use crate::approx::{minimal_scss, Guarantee, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, is_strongly_connected_by, scc, DiGraph, EdgeId};
use crate::meg::{solve_meg_with, MegSolution};
use crate::Rational;

/// A minimum strongly connected spanning subgraph, by branch and bound.
pub fn exact_scss(g: &DiGraph) -> Result<Vec<EdgeId>> {
    exact_scss_with(g, &OracleLimits::default())
}

pub fn exact_scss_with(g: &DiGraph, limits: &OracleLimits) -> Result<Vec<EdgeId>> {
    Ok(solve(g, limits)?.0)
}

pub fn exact_scss_report(g: &DiGraph, limits: &OracleLimits) -> Result<SolveReport> {
    let start = Instant::now();
    let (kept, floor) = solve(g, limits)?;
    Ok(
        SolveReport::new("exact", kept, Guarantee::Exact, start.elapsed())
            .with_lower_bound(Rational::from_integer(floor as i128)),
    )
}

/// Minimum equivalent graph: exact SCSS per strong component plus the
/// transitive reduction of the condensation.
pub fn exact_meg(g: &DiGraph, limits: &OracleLimits) -> Result<Vec<EdgeId>> {
    solve_meg_with(g, Algorithm::Exact, limits).map(|s: MegSolution| s.kept)
}

/// Returns the optimum and the root lower bound that was used.
fn solve(g: &DiGraph, limits: &OracleLimits) -> Result<(Vec<EdgeId>, usize)> {
    let n = g.n();
    if n > limits.exact_max_n {
        return Err(Error::GuardExceeded {
            what: "exact SCSS",
            size: n,
            limit: limits.exact_max_n,
        });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    if n <= 1 {
        return Ok((Vec::new(), 0));
    }
    let mut floor = n;
    if n <= limits.longest_cycle_max_n {
        let l = longest_cycle_with(g, limits)?;
        let b = cycle_lemma_bound(n, l)?.ceil().to_integer() as usize;
        floor = floor.max(b);
    }
    let seed = minimal_scss(g)?.kept;
    let mut bnb = Bnb {
        g,
        state: vec![State::Free; g.m()],
        trail: Vec::new(),
        best_size: seed.len(),
        best: seed,
        floor,
    };
    if bnb.best_size > floor {
        bnb.search();
    }
    let mut best = bnb.best;
    best.sort_unstable();
    Ok((best, floor))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    In,
    Out,
}

struct Bnb<'a> {
    g: &'a DiGraph,
    state: Vec<State>,
    trail: Vec<EdgeId>,
    best: Vec<EdgeId>,
    best_size: usize,
    floor: usize,
}

impl Bnb<'_> {
    fn set(&mut self, e: EdgeId, s: State) {
        self.state[e.0] = s;
        self.trail.push(e);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.state[e.0] = State::Free;
        }
    }

    fn done(&self) -> bool {
        self.best_size <= self.floor
    }

    /// Includes edges that are the last available way in or out of a vertex.
    /// Returns false if some vertex has no way in or out at all.
    fn propagate(&mut self) -> bool {
        let g = self.g;
        loop {
            let mut changed = false;
            for v in 0..g.n() {
                for adj in [g.out_edges(v), g.in_edges(v)] {
                    let mut avail = adj.iter().filter(|e| self.state[e.0] != State::Out);
                    let Some(&first) = avail.next() else {
                        return false;
                    };
                    if avail.next().is_none() && self.state[first.0] == State::Free {
                        self.set(first, State::In);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self) {
        if self.done() {
            return;
        }
        let mark = self.trail.len();
        if self.propagate() && is_strongly_connected_by(self.g, |e| self.state[e.0] != State::Out) {
            self.branch();
        }
        self.undo_to(mark);
    }

    fn branch(&mut self) {
        let g = self.g;
        let included: Vec<EdgeId> = g
            .edge_ids()
            .filter(|e| self.state[e.0] == State::In)
            .collect();
        let h = DiGraph::from_simple_edges(g.n(), included.iter().map(|&e| g.edge(e)).collect());
        let c = scc(&h);
        if c.count == 1 {
            if included.len() < self.best_size {
                self.best_size = included.len();
                self.best = included;
            }
            return;
        }
        let d = &c.condensation;
        let sources: Vec<usize> = (0..c.count).filter(|&x| d.in_degree(x) == 0).collect();
        let sinks: Vec<usize> = (0..c.count).filter(|&x| d.out_degree(x) == 0).collect();
        let lb = (included.len() + sources.len().max(sinks.len())).max(self.floor);
        if lb >= self.best_size {
            return;
        }
        // Branch on the source or sink component with the fewest ways to fix it.
        let mut choice: Option<Vec<EdgeId>> = None;
        let mut consider = |cands: Vec<EdgeId>| {
            if choice.as_ref().is_none_or(|c| cands.len() < c.len()) {
                choice = Some(cands);
            }
        };
        for &s in &sources {
            consider(
                c.members[s]
                    .iter()
                    .flat_map(|&v| g.in_edges(v))
                    .copied()
                    .filter(|&e| self.state[e.0] == State::Free && c.comp[g.tail(e)] != s)
                    .collect(),
            );
        }
        for &t in &sinks {
            consider(
                c.members[t]
                    .iter()
                    .flat_map(|&v| g.out_edges(v))
                    .copied()
                    .filter(|&e| self.state[e.0] == State::Free && c.comp[g.head(e)] != t)
                    .collect(),
            );
        }
        let mut cands = choice.unwrap_or_default();
        cands.sort_unstable();
        let mark = self.trail.len();
        for (i, &e) in cands.iter().enumerate() {
            if i > 0 {
                self.set(cands[i - 1], State::Out);
            }
            let inner = self.trail.len();
            self.set(e, State::In);
            self.search();
            self.undo_to(inner);
            if self.done() {
                break;
            }
        }
        self.undo_to(mark);
    }
}
