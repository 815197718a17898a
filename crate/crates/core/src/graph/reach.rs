use std::collections::VecDeque;

use super::{scc, DiGraph, EdgeId};
use crate::error::{Error, Result};

/// Default vertex cap for [`reachability_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

fn bfs<F>(g: &DiGraph, s: usize, forward: bool, keep: F) -> Vec<bool>
where
    F: Fn(EdgeId) -> bool,
{
    let mut seen = vec![false; g.n()];
    if s >= g.n() {
        return seen;
    }
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let adj = if forward {
            g.out_edges(u)
        } else {
            g.in_edges(u)
        };
        for &e in adj {
            if !keep(e) {
                continue;
            }
            let w = if forward { g.head(e) } else { g.tail(e) };
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Vertices reachable from `s` (including `s`).
pub fn reachable_from(g: &DiGraph, s: usize) -> Vec<bool> {
    bfs(g, s, true, |_| true)
}

/// Vertices that can reach `t` (including `t`).
pub fn reaching_to(g: &DiGraph, t: usize) -> Vec<bool> {
    bfs(g, t, false, |_| true)
}

pub fn is_strongly_connected(g: &DiGraph) -> bool {
    is_strongly_connected_by(g, |_| true)
}

/// Strong connectivity of the spanning subgraph whose edges have `mask[e]`.
pub fn is_strongly_connected_masked(g: &DiGraph, mask: &[bool]) -> bool {
    is_strongly_connected_by(g, |e| mask[e.0])
}

pub fn is_strongly_connected_subset(g: &DiGraph, edges: &[EdgeId]) -> Result<bool> {
    let mask = g.edge_mask(edges)?;
    Ok(is_strongly_connected_masked(g, &mask))
}

pub(crate) fn is_strongly_connected_by<F>(g: &DiGraph, keep: F) -> bool
where
    F: Fn(EdgeId) -> bool + Copy,
{
    if g.n() <= 1 {
        return true;
    }
    bfs(g, 0, true, keep).iter().all(|&b| b) && bfs(g, 0, false, keep).iter().all(|&b| b)
}

/// Transitive closure as bit rows. Vertices of one strong component share a
/// row.
#[derive(Debug, Clone)]
pub struct ReachMatrix {
    n: usize,
    words: usize,
    row_of: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

impl ReachMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.rows[self.row_of[u]][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[self.row_of[u]]
    }

    /// Number of reachable ordered pairs, `(u, u)` included.
    pub fn pair_count(&self) -> usize {
        (0..self.n)
            .map(|u| {
                self.row(u)
                    .iter()
                    .map(|w| w.count_ones() as usize)
                    .sum::<usize>()
            })
            .sum()
    }

    /// First pair `(u, v)` on which the two closures disagree.
    pub fn first_difference(&self, other: &ReachMatrix) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), 0));
        }
        for u in 0..self.n {
            let (a, b) = (self.row(u), other.row(u));
            for w in 0..self.words {
                let diff = a[w] ^ b[w];
                if diff != 0 {
                    return Some((u, w * 64 + diff.trailing_zeros() as usize));
                }
            }
        }
        None
    }
}

impl PartialEq for ReachMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Eq for ReachMatrix {}

pub fn reachability_closure(g: &DiGraph) -> Result<ReachMatrix> {
    reachability_closure_capped(g, DEFAULT_CLOSURE_CAP)
}

pub fn reachability_closure_capped(g: &DiGraph, cap: usize) -> Result<ReachMatrix> {
    let n = g.n();
    if n > cap {
        return Err(Error::GuardExceeded {
            what: "reachability closure",
            size: n,
            limit: cap,
        });
    }
    let c = scc(g);
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; c.count];
    // Ids are topological, so successors are finished before predecessors.
    for comp in (0..c.count).rev() {
        let mut row = vec![0u64; words];
        for &v in &c.members[comp] {
            row[v / 64] |= 1 << (v % 64);
        }
        for &e in c.condensation.out_edges(comp) {
            let succ = &rows[c.condensation.head(e)];
            for (a, b) in row.iter_mut().zip(succ) {
                *a |= *b;
            }
        }
        rows[comp] = row;
    }
    Ok(ReachMatrix {
        n,
        words,
        row_of: c.comp,
        rows,
    })
}
