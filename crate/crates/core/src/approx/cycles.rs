use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, EdgeId};

/// A simple cycle, as edge ids of the graph it was found in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that the edges chain head to tail, close up, and visit no
    /// vertex twice.
    pub fn validate(&self, g: &DiGraph) -> Result<()> {
        validate_cycle_by(&self.edges, |e| {
            g.check_edge(e)?;
            Ok(g.edge(e))
        })
    }

    pub fn vertices(&self, g: &DiGraph) -> Vec<usize> {
        self.edges.iter().map(|&e| g.tail(e)).collect()
    }
}

/// Shared cycle check; `ends` maps an edge to the (tail, head) it has in the
/// graph the cycle lives in.
pub(crate) fn validate_cycle_by<F>(edges: &[EdgeId], mut ends: F) -> Result<()>
where
    F: FnMut(EdgeId) -> Result<(usize, usize)>,
{
    if edges.len() < 2 {
        return Err(Error::InvalidCycle(format!(
            "length {} is below 2",
            edges.len()
        )));
    }
    let pairs = edges.iter().map(|&e| ends(e)).collect::<Result<Vec<_>>>()?;
    let mut tails = Vec::with_capacity(pairs.len());
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if u == v {
            return Err(Error::InvalidCycle(format!("edge {} is a loop", edges[i])));
        }
        let (next_tail, _) = pairs[(i + 1) % pairs.len()];
        if v != next_tail {
            return Err(Error::InvalidCycle(format!(
                "edge {} does not chain into edge {}",
                edges[i],
                edges[(i + 1) % edges.len()]
            )));
        }
        tails.push(u);
    }
    tails.sort_unstable();
    if tails.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidCycle("a vertex repeats".into()));
    }
    Ok(())
}

/// Finds a simple cycle with at least `k` edges, or `None` if there is none.
///
/// Every simple path `P` of `k - 1` edges is tried in DFS order (start vertex
/// ascending, then edge ids ascending); the cycle is closed by a BFS from the
/// head of `P` back to its tail with the interior of `P` removed. Only paths
/// whose start is the smallest vertex on the cycle are tried, which loses
/// nothing since every cycle can be rotated to start there.
pub fn find_cycle_at_least(g: &DiGraph, k: usize) -> Option<Cycle> {
    let k = k.max(2);
    let n = g.n();
    if k > n {
        return None;
    }
    let mut blocked = vec![false; n];
    let mut path: Vec<EdgeId> = Vec::with_capacity(k);
    let mut finder = Finder {
        g,
        blocked: &mut blocked,
        mark: vec![0; n],
        stamp: 0,
        pred: vec![EdgeId(0); n],
        queue: VecDeque::new(),
    };
    for s in 0..n {
        finder.blocked[s] = true;
        if let Some(c) = finder.extend(s, s, k - 1, &mut path) {
            return Some(c);
        }
        finder.blocked[s] = false;
    }
    None
}

struct Finder<'a> {
    g: &'a DiGraph,
    blocked: &'a mut Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    pred: Vec<EdgeId>,
    queue: VecDeque<usize>,
}

impl Finder<'_> {
    fn extend(&mut self, s: usize, v: usize, left: usize, path: &mut Vec<EdgeId>) -> Option<Cycle> {
        if left == 0 {
            return self.close(s, v, path);
        }
        for &e in self.g.out_edges(v) {
            let w = self.g.head(e);
            if w < s || self.blocked[w] {
                continue;
            }
            self.blocked[w] = true;
            path.push(e);
            let found = self.extend(s, w, left - 1, path);
            path.pop();
            self.blocked[w] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// BFS from `h` to `s` through vertices above `s` that are not on the path.
    fn close(&mut self, s: usize, h: usize, path: &[EdgeId]) -> Option<Cycle> {
        self.stamp += 1;
        let stamp = self.stamp;
        self.mark[h] = stamp;
        self.queue.clear();
        self.queue.push_back(h);
        while let Some(u) = self.queue.pop_front() {
            for &e in self.g.out_edges(u) {
                let w = self.g.head(e);
                if w == s {
                    let mut back = vec![e];
                    let mut x = u;
                    while x != h {
                        let p = self.pred[x];
                        back.push(p);
                        x = self.g.tail(p);
                    }
                    back.reverse();
                    let mut edges = path.to_vec();
                    edges.extend(back);
                    return Some(Cycle { edges });
                }
                if w < s || self.blocked[w] || self.mark[w] == stamp {
                    continue;
                }
                self.mark[w] = stamp;
                self.pred[w] = e;
                self.queue.push_back(w);
            }
        }
        None
    }
}
