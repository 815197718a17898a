use std::collections::{BTreeSet, HashSet};

use super::{DiGraph, EdgeId, UnionFind};
use crate::error::Result;

/// Union-find over the vertices of a graph plus the set `S` of contracted
/// edges. Together with the graph it realizes the quotient `G/S`.
#[derive(Debug, Clone)]
pub struct ContractionState {
    uf: UnionFind,
    contracted: BTreeSet<EdgeId>,
    unions: usize,
}

/// The quotient graph `G/S` materialized as a [`DiGraph`].
///
/// Classes are numbered by their smallest member. Each quotient edge keeps the
/// smallest original id among the edges it stands for, so the result does not
/// depend on the order in which `S` was contracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: DiGraph,
    /// Quotient vertex of every original vertex.
    pub class_of: Vec<usize>,
    /// Original edge behind every quotient edge.
    pub origin: Vec<EdgeId>,
    /// Original vertices of every class, ascending.
    pub members: Vec<Vec<usize>>,
}

impl Quotient {
    pub fn to_original(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges.iter().map(|e| self.origin[e.0]).collect()
    }

    /// Quotient edge standing for the original edge `e`, if `e` survived.
    pub fn edge_of(&self, g: &DiGraph, e: EdgeId) -> Option<EdgeId> {
        let (u, v) = g.edge(e);
        let q = self.graph.find_edge(self.class_of[u], self.class_of[v])?;
        (self.origin[q.0] == e).then_some(q)
    }
}

impl ContractionState {
    pub fn new(n: usize) -> Self {
        ContractionState {
            uf: UnionFind::new(n),
            contracted: BTreeSet::new(),
            unions: 0,
        }
    }

    /// Adds `e` to `S`. Returns whether it merged two classes.
    pub fn contract_edge(&mut self, g: &DiGraph, e: EdgeId) -> Result<bool> {
        g.check_edge(e)?;
        self.contracted.insert(e);
        let (u, v) = g.edge(e);
        let merged = self.uf.union(u, v).is_some();
        if merged {
            self.unions += 1;
        }
        Ok(merged)
    }

    pub fn contract_edges(&mut self, g: &DiGraph, edges: &[EdgeId]) -> Result<()> {
        for &e in edges {
            self.contract_edge(g, e)?;
        }
        Ok(())
    }

    pub fn find(&mut self, v: usize) -> usize {
        self.uf.find(v)
    }

    /// Representative without path compression.
    pub fn rep(&self, v: usize) -> usize {
        self.uf.find_const(v)
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.rep(a) == self.rep(b)
    }

    pub fn contracted(&self) -> &BTreeSet<EdgeId> {
        &self.contracted
    }

    pub fn union_count(&self) -> usize {
        self.unions
    }

    /// Number of quotient vertices.
    pub fn class_count(&self) -> usize {
        self.uf.set_count()
    }

    pub fn quotient(&self, g: &DiGraph) -> Quotient {
        let n = g.n();
        let mut label = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.rep(v);
            if label[r] == usize::MAX {
                label[r] = members.len();
                members.push(Vec::new());
            }
            class_of[v] = label[r];
            members[label[r]].push(v);
        }
        let mut seen = HashSet::new();
        let mut pairs = Vec::new();
        let mut origin = Vec::new();
        for e in g.edge_ids() {
            let (u, v) = g.edge(e);
            let (a, b) = (class_of[u], class_of[v]);
            if a != b && seen.insert((a, b)) {
                pairs.push((a, b));
                origin.push(e);
            }
        }
        Quotient {
            graph: DiGraph::from_simple_edges(members.len(), pairs),
            class_of,
            origin,
            members,
        }
    }
}

/// Contracts every edge of `s` in `g`.
pub fn contract(g: &DiGraph, s: &[EdgeId]) -> Result<ContractionState> {
    let mut st = ContractionState::new(g.n());
    st.contract_edges(g, s)?;
    Ok(st)
}
