use std::collections::VecDeque;
use std::time::Instant;

use super::report::{Guarantee, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, is_strongly_connected_by, DiGraph, EdgeId};
use crate::Rational;

/// BFS tree edges from `root`, following out-edges or in-edges.
fn bfs_tree(g: &DiGraph, root: usize, forward: bool) -> Vec<Option<EdgeId>> {
    let mut via = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let adj = if forward {
            g.out_edges(u)
        } else {
            g.in_edges(u)
        };
        for &e in adj {
            let w = if forward { g.head(e) } else { g.tail(e) };
            if !seen[w] {
                seen[w] = true;
                via[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    via
}

fn absolute(n: usize) -> Guarantee {
    Guarantee::Absolute(2 * n.saturating_sub(1))
}

/// Union of a BFS out-branching and a BFS in-branching from `root`.
pub fn branching_baseline(g: &DiGraph, root: usize) -> Result<SolveReport> {
    let start = Instant::now();
    if root >= g.n() && g.n() > 0 {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut kept = Vec::new();
    if g.n() > 0 {
        kept.extend(bfs_tree(g, root, true).into_iter().flatten());
        kept.extend(bfs_tree(g, root, false).into_iter().flatten());
    }
    Ok(
        SolveReport::new("branching", kept, absolute(g.n()), start.elapsed())
            .with_lower_bound(Rational::from_integer(g.n() as i128)),
    )
}

/// Deletes edges in id order whenever strong connectivity survives.
pub fn minimal_scss(g: &DiGraph) -> Result<SolveReport> {
    let start = Instant::now();
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut mask = vec![true; g.m()];
    for e in g.edge_ids() {
        mask[e.0] = false;
        if !is_strongly_connected_by(g, |x| mask[x.0]) {
            mask[e.0] = true;
        }
    }
    let kept = g.edge_ids().filter(|e| mask[e.0]).collect();
    Ok(
        SolveReport::new("minimal", kept, absolute(g.n()), start.elapsed())
            .with_lower_bound(Rational::from_integer(g.n() as i128)),
    )
}

/// Whether no single kept edge can be dropped without losing strong
/// connectivity.
pub fn is_minimal(g: &DiGraph, kept: &[EdgeId]) -> Result<bool> {
    let mut mask = g.edge_mask(kept)?;
    for &e in kept {
        mask[e.0] = false;
        let strong = is_strongly_connected_by(g, |x| mask[x.0]);
        mask[e.0] = true;
        if strong {
            return Ok(false);
        }
    }
    Ok(true)
}
