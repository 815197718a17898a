use super::{OracleLimits, LONGEST_CYCLE_HARD_MAX};
use crate::error::{Error, Result};
use crate::graph::DiGraph;

/// Edge count of a longest simple cycle, 0 for an acyclic graph.
pub fn longest_cycle(g: &DiGraph) -> Result<usize> {
    longest_cycle_with(g, &OracleLimits::default())
}

pub fn longest_cycle_with(g: &DiGraph, limits: &OracleLimits) -> Result<usize> {
    let limit = limits.longest_cycle_max_n.min(LONGEST_CYCLE_HARD_MAX);
    if g.n() > limit {
        return Err(Error::GuardExceeded {
            what: "longest cycle",
            size: g.n(),
            limit,
        });
    }
    let mut search = Search { g, best: 0 };
    for s in 0..g.n() {
        // Cycles through s use only vertices >= s.
        if search.best >= g.n() - s {
            break;
        }
        search.dfs(s, s, 1u64 << s, 0);
    }
    Ok(search.best)
}

/// Whether some simple cycle has more than `len` edges. Explores paths of at
/// most `len + 1` edges, so it works on graphs too large for
/// [`longest_cycle`] as long as cycles are short.
pub fn has_cycle_longer_than(g: &DiGraph, len: usize) -> bool {
    let n = g.n();
    let mut on_path = vec![false; n];
    // Paths of exactly `want` edges from the cycle's smallest vertex `s`,
    // then any way back to `s` that avoids the path.
    fn dfs(
        g: &DiGraph,
        s: usize,
        v: usize,
        depth: usize,
        want: usize,
        on_path: &mut [bool],
    ) -> bool {
        if depth == want {
            return closes(g, s, v, on_path);
        }
        for &e in g.out_edges(v) {
            let w = g.head(e);
            if w == s && depth + 1 == want {
                return true;
            }
            if w <= s || on_path[w] {
                continue;
            }
            on_path[w] = true;
            let hit = dfs(g, s, w, depth + 1, want, on_path);
            on_path[w] = false;
            if hit {
                return true;
            }
        }
        false
    }
    /// Any simple path from `v` back to `s` through vertices above `s`.
    fn closes(g: &DiGraph, s: usize, v: usize, on_path: &[bool]) -> bool {
        let mut seen = on_path.to_vec();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &e in g.out_edges(u) {
                let w = g.head(e);
                if w == s {
                    return true;
                }
                if w > s && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
    let want = len + 1;
    (0..n).any(|s| {
        on_path[s] = true;
        let hit = dfs(g, s, s, 0, want, &mut on_path);
        on_path[s] = false;
        hit
    })
}

struct Search<'a> {
    g: &'a DiGraph,
    best: usize,
}

impl Search<'_> {
    fn dfs(&mut self, s: usize, v: usize, mask: u64, depth: usize) {
        for &e in self.g.out_edges(v) {
            let w = self.g.head(e);
            if w == s {
                self.best = self.best.max(depth + 1);
                continue;
            }
            if w < s || mask >> w & 1 == 1 {
                continue;
            }
            self.dfs(s, w, mask | 1 << w, depth + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> DiGraph {
        DiGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn dag_and_cycle() {
        let dag = DiGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(longest_cycle(&dag).unwrap(), 0);
        assert_eq!(longest_cycle(&cycle(7)).unwrap(), 7);
    }

    #[test]
    fn longest_among_several() {
        let g = DiGraph::from_edges(5, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(longest_cycle(&g).unwrap(), 4);
        assert!(has_cycle_longer_than(&g, 3));
        assert!(!has_cycle_longer_than(&g, 4));
    }

    #[test]
    fn guard() {
        let g = cycle(21);
        assert!(matches!(
            longest_cycle(&g),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(has_cycle_longer_than(&g, 20));
        assert!(!has_cycle_longer_than(&g, 21));
    }
}
