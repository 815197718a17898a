//! Minimum equivalent graph: strong components are solved by an SCSS
//! algorithm, the condensation by transitive reduction.

use std::collections::VecDeque;

use crate::approx::{Algorithm, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{scc, DiGraph, EdgeId};
use crate::oracle::OracleLimits;

/// Edges `(u, v)` of a DAG with no other path from `u` to `v`.
pub fn transitive_reduction(dag: &DiGraph) -> Result<Vec<EdgeId>> {
    let order = dag.topological_order().ok_or(Error::Cyclic)?;
    let mut pos = vec![0; dag.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut seen = vec![usize::MAX; dag.n()];
    let mut queue = VecDeque::new();
    let mut kept = Vec::new();
    for e in dag.edge_ids() {
        let (u, v) = dag.edge(e);
        // Search u ~> v without e; vertices after v in topological order
        // cannot lead to v.
        seen[u] = e.0;
        queue.clear();
        queue.push_back(u);
        let mut found = false;
        'bfs: while let Some(x) = queue.pop_front() {
            for &f in dag.out_edges(x) {
                if f == e {
                    continue;
                }
                let y = dag.head(f);
                if y == v {
                    found = true;
                    break 'bfs;
                }
                if seen[y] != e.0 && pos[y] < pos[v] {
                    seen[y] = e.0;
                    queue.push_back(y);
                }
            }
        }
        if !found {
            kept.push(e);
        }
    }
    Ok(kept)
}

/// Per-component result of [`solve_meg`].
#[derive(Debug, Clone)]
pub struct ComponentReport {
    /// Original vertices, ascending.
    pub vertices: Vec<usize>,
    /// Report with edge ids mapped back to the input graph.
    pub report: SolveReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AcyclicReport {
    /// Condensation edges kept, as original edge ids.
    pub kept: Vec<EdgeId>,
    /// Condensation edges dropped by the reduction.
    pub removed: usize,
}

#[derive(Debug, Clone)]
pub struct MegSolution {
    /// Kept edges, ascending.
    pub kept: Vec<EdgeId>,
    pub components: Vec<ComponentReport>,
    pub acyclic: AcyclicReport,
}

impl MegSolution {
    pub fn size(&self) -> usize {
        self.kept.len()
    }
}

pub fn solve_meg(g: &DiGraph, alg: Algorithm) -> Result<MegSolution> {
    solve_meg_with(g, alg, &OracleLimits::default())
}

pub fn solve_meg_with(g: &DiGraph, alg: Algorithm, limits: &OracleLimits) -> Result<MegSolution> {
    let c = scc(g);
    let mut kept = Vec::new();
    let mut components = Vec::new();
    for members in c.members.iter().filter(|m| m.len() > 1) {
        if alg == Algorithm::Exact && members.len() > limits.exact_max_n {
            return Err(Error::GuardExceeded {
                what: "exact SCSS component",
                size: members.len(),
                limit: limits.exact_max_n,
            });
        }
        let (sub, origin) = g.induced_subgraph(members);
        let mut report = alg.run_with(&sub, limits)?;
        report.kept = report.kept.iter().map(|e| origin[e.0]).collect();
        report.kept.sort_unstable();
        kept.extend_from_slice(&report.kept);
        components.push(ComponentReport {
            vertices: members.clone(),
            report,
        });
    }
    let reduced = transitive_reduction(&c.condensation)?;
    let acyclic = AcyclicReport {
        kept: reduced.iter().map(|e| c.origin[e.0]).collect(),
        removed: c.condensation.m() - reduced.len(),
    };
    kept.extend_from_slice(&acyclic.kept);
    kept.sort_unstable();
    Ok(MegSolution {
        kept,
        components,
        acyclic,
    })
}

/// Whether `kept` has the same reachability as `g`. Fails on unknown ids.
pub fn verify_equivalent(g: &DiGraph, kept: &[EdgeId]) -> Result<bool> {
    Ok(reachability_loss(g, kept)?.is_none())
}

/// A pair `(u, v)` with `u ~> v` in `g` but not through `kept`, if any.
///
/// Works component-wise: the strong components must coincide and every
/// condensation edge of `g` must stay reachable in the condensation of the
/// kept subgraph. No quadratic closure is built.
pub fn reachability_loss(g: &DiGraph, kept: &[EdgeId]) -> Result<Option<(usize, usize)>> {
    let (h, _) = g.spanning_subgraph(kept)?;
    let cg = scc(g);
    let ch = scc(&h);
    if ch.count != cg.count {
        // Some component of g splits in h; find two of its vertices.
        for members in &cg.members {
            let first = ch.comp[members[0]];
            if let Some(&b) = members.iter().find(|&&v| ch.comp[v] != first) {
                let a = members[0];
                let a_reaches_b = crate::graph::reachable_from(&h, a)[b];
                return Ok(Some(if a_reaches_b { (b, a) } else { (a, b) }));
            }
        }
        unreachable!("kept subgraph refines the components of g");
    }
    let d = &ch.condensation;
    let mut mark = vec![usize::MAX; ch.count];
    let mut queue = VecDeque::new();
    for (i, &e) in cg.origin.iter().enumerate() {
        let (u, v) = g.edge(e);
        let (a, b) = (ch.comp[u], ch.comp[v]);
        // Component ids are topological in both condensations.
        mark[a] = i;
        queue.clear();
        queue.push_back(a);
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            if x == b {
                found = true;
                break;
            }
            for &f in d.out_edges(x) {
                let y = d.head(f);
                if mark[y] != i && y <= b {
                    mark[y] = i;
                    queue.push_back(y);
                }
            }
        }
        if !found {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}
