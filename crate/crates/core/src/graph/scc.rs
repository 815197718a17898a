use std::collections::HashSet;

use super::{DiGraph, EdgeId};

/// Strong components and the condensation DAG.
///
/// Component ids follow a topological order of the condensation: every
/// condensation edge goes from a smaller id to a larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensationResult {
    pub comp: Vec<usize>,
    pub count: usize,
    pub condensation: DiGraph,
    /// Smallest original edge behind every condensation edge.
    pub origin: Vec<EdgeId>,
    /// Vertices of every component, ascending.
    pub members: Vec<Vec<usize>>,
}

impl CondensationResult {
    pub fn is_single(&self) -> bool {
        self.count <= 1
    }
}

/// Tarjan's algorithm without recursion.
pub fn scc(g: &DiGraph) -> CondensationResult {
    let comp = tarjan(g, |_| true);
    build(g, comp)
}

/// Component labels of the spanning subgraph selected by `keep`; ids are in
/// reverse topological order (sinks first).
pub(crate) fn tarjan<F: Fn(EdgeId) -> bool>(g: &DiGraph, keep: F) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    let mut ncomp = 0;
    for s in 0..n {
        if index[s] != NONE {
            continue;
        }
        call.push((s, 0));
        index[s] = next;
        low[s] = next;
        next += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let out = g.out_edges(v);
            if *pos < out.len() {
                let e = out[*pos];
                *pos += 1;
                if !keep(e) {
                    continue;
                }
                let w = g.head(e);
                if index[w] == NONE {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}

fn build(g: &DiGraph, raw: Vec<usize>) -> CondensationResult {
    let count = raw.iter().map(|&c| c + 1).max().unwrap_or(0);
    // Tarjan finishes sinks first; flip so ids run source to sink.
    let comp: Vec<usize> = raw.iter().map(|&c| count - 1 - c).collect();
    let mut members = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    let mut origin = Vec::new();
    for e in g.edge_ids() {
        let (u, v) = g.edge(e);
        let (a, b) = (comp[u], comp[v]);
        if a != b && seen.insert((a, b)) {
            pairs.push((a, b));
            origin.push(e);
        }
    }
    CondensationResult {
        comp,
        count,
        condensation: DiGraph::from_simple_edges(count, pairs),
        origin,
        members,
    }
}
