//! Directed graphs with stable edge identities, plus the contraction,
//! strong-component and reachability machinery the solvers are built on.

mod contraction;
mod format;
mod reach;
mod scc;
mod union_find;

use std::collections::HashSet;
use std::fmt;

pub use contraction::{contract, ContractionState, Quotient};
pub use format::{
    parse_edge_list, parse_graph, read_graph_file, write_graph, write_solution, EdgeList,
};
pub(crate) use reach::is_strongly_connected_by;
pub use reach::{
    is_strongly_connected, is_strongly_connected_masked, is_strongly_connected_subset,
    reachability_closure, reachability_closure_capped, reachable_from, reaching_to, ReachMatrix,
    DEFAULT_CLOSURE_CAP,
};
pub use scc::{scc, CondensationResult};
pub use union_find::UnionFind;

use crate::error::{Error, Result};

/// Position of an edge in a graph's (normalized) edge sequence.
///
/// Contracted graphs never renumber edges: a surviving edge of `G/S` carries
/// the id of the original edge it is identified with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Counts of input edges dropped while normalizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Normalization {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Immutable directed graph over vertices `0..n`.
///
/// Self-loops are dropped and, among parallel edges, only the earliest one is
/// kept. Adjacency lists are stored in CSR form and list edges in increasing
/// id order.
#[derive(Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out_start: Vec<usize>,
    out_list: Vec<EdgeId>,
    /// `(edge id, head)` of `out_list`, position by position, as `u32`.
    /// Empty when the graph is too large for 32-bit ids.
    out_adj: Vec<(u32, u32)>,
    in_start: Vec<usize>,
    in_list: Vec<EdgeId>,
    dropped: Normalization,
}

impl fmt::Debug for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl DiGraph {
    /// Builds a normalized graph; see [`Normalization`] for what gets dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<DiGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut kept = Vec::new();
        let mut seen = HashSet::new();
        let mut dropped = Normalization::default();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            if !seen.insert((u, v)) {
                dropped.duplicates += 1;
                continue;
            }
            kept.push((u, v));
        }
        let mut g = Self::from_simple_edges(n, kept);
        g.dropped = dropped;
        Ok(g)
    }

    /// Edges must already be in range, loop-free and free of duplicates.
    pub(crate) fn from_simple_edges(n: usize, edges: Vec<(usize, usize)>) -> DiGraph {
        let (out_start, out_list) = csr(n, &edges, |&(u, _)| u);
        let (in_start, in_list) = csr(n, &edges, |&(_, v)| v);
        let out_adj = if n < u32::MAX as usize && edges.len() < u32::MAX as usize {
            out_list
                .iter()
                .map(|e| (e.0 as u32, edges[e.0].1 as u32))
                .collect()
        } else {
            Vec::new()
        };
        DiGraph {
            n,
            edges,
            out_start,
            out_list,
            out_adj,
            in_start,
            in_list,
            dropped: Normalization::default(),
        }
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> DiGraph {
        Self::from_simple_edges(n, Vec::new())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    #[inline]
    pub fn tail(&self, e: EdgeId) -> usize {
        self.edges[e.0].0
    }

    #[inline]
    pub fn head(&self, e: EdgeId) -> usize {
        self.edges[e.0].1
    }

    pub fn edge_pairs(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    #[inline]
    pub fn out_edges(&self, v: usize) -> &[EdgeId] {
        &self.out_list[self.out_start[v]..self.out_start[v + 1]]
    }

    /// `(edge id, head)` of every out-list, concatenated in vertex order;
    /// `None` if the graph exceeds 32-bit ids.
    #[inline]
    pub(crate) fn out_adj(&self) -> Option<&[(u32, u32)]> {
        (self.out_adj.len() == self.m()).then_some(&self.out_adj[..])
    }

    /// Range of `v`'s out-list inside [`DiGraph::out_adj`].
    #[inline]
    pub(crate) fn out_range(&self, v: usize) -> (usize, usize) {
        (self.out_start[v], self.out_start[v + 1])
    }

    #[inline]
    pub fn in_edges(&self, v: usize) -> &[EdgeId] {
        &self.in_list[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_start[v + 1] - self.out_start[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_start[v + 1] - self.in_start[v]
    }

    pub fn normalization(&self) -> Normalization {
        self.dropped
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.out_edges(u)
            .iter()
            .copied()
            .find(|&e| self.head(e) == v)
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.m() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// Boolean mask over edge ids; fails on an unknown id.
    pub fn edge_mask(&self, edges: &[EdgeId]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.m()];
        for &e in edges {
            self.check_edge(e)?;
            mask[e.0] = true;
        }
        Ok(mask)
    }

    /// Spanning subgraph on the given edges, renumbered in increasing id order.
    /// The second component maps new edge ids back to ids of `self`.
    pub fn spanning_subgraph(&self, edges: &[EdgeId]) -> Result<(DiGraph, Vec<EdgeId>)> {
        let mask = self.edge_mask(edges)?;
        let origin: Vec<EdgeId> = self.edge_ids().filter(|e| mask[e.0]).collect();
        let pairs = origin.iter().map(|&e| self.edge(e)).collect();
        Ok((DiGraph::from_simple_edges(self.n, pairs), origin))
    }

    /// Subgraph induced by `vertices` (in the given order, which becomes the
    /// new numbering). Returns the graph and the new-to-old edge map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (DiGraph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut origin = Vec::new();
        for e in self.edge_ids() {
            let (u, v) = self.edge(e);
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                origin.push(e);
            }
        }
        (DiGraph::from_simple_edges(vertices.len(), pairs), origin)
    }

    /// Whether the graph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn's algorithm; `None` when a cycle exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut order: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &e in self.out_edges(u) {
                let v = self.head(e);
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    order.push(v);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }
}

fn csr<F>(n: usize, edges: &[(usize, usize)], key: F) -> (Vec<usize>, Vec<EdgeId>)
where
    F: Fn(&(usize, usize)) -> usize,
{
    let mut start = vec![0usize; n + 1];
    for e in edges {
        start[key(e) + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut list = vec![EdgeId(0); edges.len()];
    for (i, e) in edges.iter().enumerate() {
        let k = key(e);
        list[fill[k]] = EdgeId(i);
        fill[k] += 1;
    }
    (start, list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_drops_loops_and_later_duplicates() {
        let g = DiGraph::from_edges(3, [(0, 1), (1, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edge_pairs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(
            g.normalization(),
            Normalization {
                self_loops: 1,
                duplicates: 1
            }
        );
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        assert!(matches!(
            DiGraph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn adjacency_lists_are_in_id_order() {
        let g = DiGraph::from_edges(3, [(0, 2), (1, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.out_edges(0), &[EdgeId(0), EdgeId(2)]);
        assert_eq!(g.in_edges(0), &[EdgeId(1), EdgeId(3)]);
        assert_eq!(g.find_edge(0, 1), Some(EdgeId(2)));
        assert_eq!(g.find_edge(1, 2), None);
    }

    #[test]
    fn induced_subgraph_keeps_origin() {
        let g = DiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let (h, origin) = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(h.edge_pairs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(origin, vec![EdgeId(1), EdgeId(2), EdgeId(3)]);
    }

    #[test]
    fn topological_order_detects_cycles() {
        let dag = DiGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(dag.topological_order(), Some(vec![0, 1, 2]));
        let cyc = DiGraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert!(!cyc.is_acyclic());
    }
}
