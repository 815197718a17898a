//! Near-linear cycle contraction for `k = 3`.
//!
//! A single DFS from vertex 0 keeps the quotient of the traversed edges in
//! the shape "out-branching plus some of its reverse edges", with reverse
//! edges missing only along the active path. A traversed edge that closes a
//! cycle of three or more quotient edges has the cycle contracted at once;
//! one closing a 2-cycle is only remembered. When the DFS ends the quotient
//! is a tree of 2-cycles and all of its edges are kept.

use std::time::Instant;

use super::report::{Guarantee, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{DiGraph, EdgeId};
use crate::Rational;

/// Per-representative pointer toward the active child.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActiveLink {
    /// Not on the active path.
    Nil,
    /// This representative holds the vertex being explored.
    Current,
    /// Branching edge into the next representative on the active path.
    Edge(EdgeId),
}

const NONE: u32 = u32::MAX;
/// `active` of the class being explored; `from_root` of the DFS root.
const MARK: u32 = u32::MAX - 1;

/// Per-class fields, meaningful on representatives only. Kept apart from
/// the union-find parents, which every edge event reads, so that the hot
/// array stays small.
#[derive(Debug, Clone, Copy)]
struct Slot {
    from_root: u32,
    to_root: u32,
    active: u32,
    /// Head of the `active` edge, so the active path can be walked without
    /// touching the edge list.
    down: u32,
}

/// Read on every edge event: the union-find parent (`NONE` while the vertex
/// is unvisited) next to the start of the vertex's out-list, so that the
/// check that discovers a vertex also brings in where its edges live.
#[derive(Debug, Clone, Copy)]
struct Hot {
    parent: u32,
    start: u32,
}

#[derive(Debug, Clone)]
pub struct DfsState {
    root: usize,
    /// One entry per vertex plus a sentinel holding the total edge count.
    hot: Vec<Hot>,
    slots: Vec<Slot>,
    rank: Vec<u8>,
    /// DFS stack of `(vertex, next position, end)` with positions in the
    /// graph's concatenated out-lists. An edge has been traversed iff its
    /// tail is visited and, if the tail is still on the stack, the edge
    /// comes before the scan position.
    stack: Vec<(usize, usize, usize)>,
    contracted: Vec<EdgeId>,
    finds: u64,
    unions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfsEvent<'a> {
    TreeEdge(EdgeId),
    NonTreeEdge(EdgeId),
    /// Emitted just before the `NonTreeEdge` event that caused it. The first
    /// edge is the traversed one, then the reverse edges up to the branch
    /// point, then the branching edges back down.
    Contracted(&'a [EdgeId]),
    Finished(usize),
}

pub trait DfsObserver {
    fn event(&mut self, g: &DiGraph, event: DfsEvent<'_>, state: &DfsState);
}

impl DfsObserver for () {
    #[inline(always)]
    fn event(&mut self, _: &DiGraph, _: DfsEvent<'_>, _: &DfsState) {}
}

/// Work counters of one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FastStats {
    pub edge_events: usize,
    pub contractions: usize,
    pub unions: usize,
    pub finds: u64,
}

fn edge_of(x: u32) -> Option<EdgeId> {
    (x < MARK).then_some(EdgeId(x as usize))
}

impl DfsState {
    fn new(g: &DiGraph, root: usize) -> Self {
        let n = g.n();
        let mut slots = vec![
            Slot {
                from_root: NONE,
                to_root: NONE,
                active: NONE,
                down: NONE,
            };
            n
        ];
        slots[root].from_root = MARK;
        slots[root].active = MARK;
        let mut hot: Vec<Hot> = (0..n)
            .map(|v| Hot {
                parent: NONE,
                start: g.out_range(v).0 as u32,
            })
            .collect();
        hot.push(Hot {
            parent: NONE,
            start: g.m() as u32,
        });
        hot[root].parent = root as u32;
        DfsState {
            root,
            hot,
            slots,
            rank: vec![0; n],
            stack: vec![(root, g.out_range(root).0, g.out_range(root).1)],
            contracted: Vec::new(),
            finds: 0,
            unions: 0,
        }
    }

    #[inline]
    fn find(&mut self, v: usize) -> usize {
        self.finds += 1;
        let mut r = v;
        while self.hot[r].parent as usize != r {
            r = self.hot[r].parent as usize;
        }
        let mut cur = v;
        while cur != r {
            let next = self.hot[cur].parent as usize;
            self.hot[cur].parent = r as u32;
            cur = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.hot[lo].parent = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        self.unions += 1;
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Representative of `v`, without path compression.
    pub fn rep(&self, mut v: usize) -> usize {
        while self.hot[v].parent != NONE && self.hot[v].parent as usize != v {
            v = self.hot[v].parent as usize;
        }
        v
    }

    pub fn from_root(&self, r: usize) -> Option<EdgeId> {
        edge_of(self.slots[r].from_root)
    }

    pub fn to_root(&self, r: usize) -> Option<EdgeId> {
        edge_of(self.slots[r].to_root)
    }

    pub fn to_active(&self, r: usize) -> ActiveLink {
        match self.slots[r].active {
            NONE => ActiveLink::Nil,
            MARK => ActiveLink::Current,
            e => ActiveLink::Edge(EdgeId(e as usize)),
        }
    }

    pub fn is_visited(&self, v: usize) -> bool {
        self.hot[v].parent != NONE
    }

    /// Needs the graph the state belongs to, to locate `e` in its out-list.
    pub fn is_traversed(&self, g: &DiGraph, e: EdgeId) -> bool {
        let t = g.tail(e);
        if !self.is_visited(t) {
            return false;
        }
        let scanned = self
            .stack
            .iter()
            .find(|&&(v, _, _)| v == t)
            .map_or(g.out_degree(t), |&(_, pos, _)| pos - g.out_range(t).0);
        g.out_edges(t)
            .iter()
            .position(|&f| f == e)
            .is_some_and(|i| i < scanned)
    }

    fn traversed_by_id(&self, g: &DiGraph) -> Vec<bool> {
        let mut scanned: Vec<usize> = (0..g.n())
            .map(|v| {
                if self.is_visited(v) {
                    g.out_degree(v)
                } else {
                    0
                }
            })
            .collect();
        for &(v, pos, _) in &self.stack {
            scanned[v] = pos - g.out_range(v).0;
        }
        let mut by_id = vec![false; g.m()];
        for v in 0..g.n() {
            for &e in &g.out_edges(v)[..scanned[v]] {
                by_id[e.0] = true;
            }
        }
        by_id
    }

    pub fn contracted(&self) -> &[EdgeId] {
        &self.contracted
    }

    fn parent(&self, g: &DiGraph, r: usize) -> Option<usize> {
        self.from_root(r).map(|f| self.rep(g.tail(f)))
    }

    /// Checks the shape of the quotient of the traversed edges: an
    /// out-branching from the root's class plus reverse edges, where every
    /// missing reverse edge belongs to a class on the active path.
    pub fn check_invariants(&self, g: &DiGraph) -> std::result::Result<(), String> {
        let n = g.n();
        let root = self.rep(self.root);
        let traversed = self.traversed_by_id(g);
        let reps: Vec<usize> = (0..n)
            .filter(|&v| self.is_visited(v) && self.rep(v) == v)
            .collect();
        for &r in &reps {
            if r == root {
                continue;
            }
            let f = self
                .from_root(r)
                .ok_or(format!("class {r} has no branching edge"))?;
            if !traversed[f.0] || self.rep(g.head(f)) != r {
                return Err(format!("branching edge {f} does not enter class {r}"));
            }
            let p = self.rep(g.tail(f));
            if p == r || !self.is_visited(p) {
                return Err(format!("class {r} has a bad parent"));
            }
            // Parent chains must reach the root.
            let mut x = r;
            let mut steps = 0;
            while x != root {
                x = self.parent(g, x).ok_or(format!("class {x} is detached"))?;
                steps += 1;
                if steps > reps.len() {
                    return Err(format!("parent chain from {r} loops"));
                }
            }
            match self.to_root(r) {
                Some(t) => {
                    if !traversed[t.0] || self.rep(g.tail(t)) != r || self.rep(g.head(t)) != p {
                        return Err(format!("reverse edge {t} of class {r} is wrong"));
                    }
                }
                None => {
                    if self.to_active(r) == ActiveLink::Nil {
                        return Err(format!(
                            "class {r} is off the active path without a reverse edge"
                        ));
                    }
                }
            }
        }
        for e in g.edge_ids().filter(|e| traversed[e.0]) {
            let (a, b) = (self.rep(g.tail(e)), self.rep(g.head(e)));
            if a == b {
                continue;
            }
            let forward = self.parent(g, b) == Some(a);
            let backward = self.parent(g, a) == Some(b) && self.to_root(a).is_some();
            if !forward && !backward {
                return Err(format!(
                    "quotient edge {e} is neither branching nor a known reverse"
                ));
            }
        }
        for &e in &self.contracted {
            if self.rep(g.tail(e)) != self.rep(g.head(e)) {
                return Err(format!("contracted edge {e} spans two classes"));
            }
        }
        // The active path runs from the root through Edge links to Current.
        let mut x = root;
        let mut steps = 0;
        loop {
            match self.to_active(x) {
                ActiveLink::Current => break,
                ActiveLink::Nil => {
                    if reps.iter().all(|&r| self.to_active(r) == ActiveLink::Nil) {
                        break;
                    }
                    return Err(format!("active path breaks at class {x}"));
                }
                ActiveLink::Edge(t) => {
                    let y = self.rep(g.head(t));
                    if self.rep(g.tail(t)) != x || self.parent(g, y) != Some(x) {
                        return Err(format!("active link {t} is not a branching edge"));
                    }
                    x = y;
                }
            }
            steps += 1;
            if steps > reps.len() {
                return Err("active path loops".into());
            }
        }
        Ok(())
    }

    /// Handles a traversed edge `u -> w` whose head was already visited.
    #[inline]
    fn non_tree<O: DfsObserver + ?Sized>(
        &mut self,
        g: &DiGraph,
        e: EdgeId,
        u: usize,
        w: usize,
        obs: &mut O,
    ) -> Result<bool> {
        let cu = self.find(u);
        let cw = self.find(w);
        if cu == cw {
            return Ok(false);
        }
        if self.slots[cw].active == NONE {
            let t = edge_of(self.slots[cw].to_root).ok_or(Error::NotStronglyConnected)?;
            if self.slots[cu].active == MARK && self.find(g.head(t)) == cu {
                // w's class hangs off the current class, so e runs parallel
                // to its reverse edge: a 2-cycle, nothing to do.
                return Ok(false);
            }
        } else if self.slots[cw].active as usize == self.slots[cu].from_root as usize
            && self.slots[cw].active != MARK
        {
            // e is the reverse of the branching edge into the current class.
            if self.slots[cu].to_root == NONE {
                self.slots[cu].to_root = e.0 as u32;
            }
            return Ok(false);
        }
        let mut cycle = vec![e];
        let mut classes = vec![cw];
        let mut x = cw;
        while self.slots[x].active == NONE {
            let t = edge_of(self.slots[x].to_root).ok_or(Error::NotStronglyConnected)?;
            cycle.push(t);
            x = self.find(g.head(t));
            classes.push(x);
        }
        let lca = x;
        let up = cycle.len() - 1;
        let mut y = lca;
        while y != cu {
            let t = self.slots[y].active;
            debug_assert!(t < MARK, "the active path ends at the current class");
            cycle.push(EdgeId(t as usize));
            y = self.find(self.slots[y].down as usize);
            classes.push(y);
        }
        if cycle.len() == 2 {
            // A 2-cycle: either a second copy of a branching edge, or the
            // reverse of the branching edge into the current class.
            if up == 0 && self.slots[cu].to_root == NONE {
                self.slots[cu].to_root = e.0 as u32;
            }
            return Ok(false);
        }
        let from = self.slots[lca].from_root;
        let back = self.slots[lca].to_root;
        // Consecutive classes on the cycle are joined by its edges.
        for &c in &classes[1..] {
            self.union(cw, c);
        }
        let r = self.find(u);
        self.slots[r].from_root = from;
        self.slots[r].to_root = back;
        self.slots[r].active = MARK;
        self.contracted.extend_from_slice(&cycle);
        obs.event(g, DfsEvent::Contracted(&cycle), self);
        Ok(true)
    }
}

pub fn contract_cycles_3_fast(g: &DiGraph) -> Result<SolveReport> {
    contract_cycles_3_fast_observed(g, &mut ()).map(|(r, _)| r)
}

/// [`contract_cycles_3_fast`] with a callback after every DFS event.
pub fn contract_cycles_3_fast_observed<O: DfsObserver + ?Sized>(
    g: &DiGraph,
    obs: &mut O,
) -> Result<(SolveReport, FastStats)> {
    let start = Instant::now();
    let n = g.n();
    let guarantee = Guarantee::Ratio(Rational::new(7, 4));
    if n == 0 {
        let r = SolveReport::new("cc3-fast", Vec::new(), guarantee, start.elapsed());
        return Ok((r, FastStats::default()));
    }
    if n >= MARK as usize || g.m() >= MARK as usize {
        return Err(Error::GuardExceeded {
            what: "graph size for cc3-fast",
            size: n.max(g.m()),
            limit: MARK as usize - 1,
        });
    }
    let adj = g.out_adj().expect("size checked above");
    let mut st = DfsState::new(g, 0);
    let mut stats = FastStats::default();
    while let Some(&(u, pos, end)) = st.stack.last() {
        if pos < end {
            let (e, w) = adj[pos];
            let (e, w) = (EdgeId(e as usize), w as usize);
            st.stack.last_mut().unwrap().1 += 1;
            stats.edge_events += 1;
            if st.hot[w].parent == NONE {
                let cu = st.find(u);
                st.hot[w].parent = w as u32;
                st.slots[w].from_root = e.0 as u32;
                st.slots[cu].active = e.0 as u32;
                st.slots[cu].down = w as u32;
                st.slots[w].active = MARK;
                let (lo, hi) = (st.hot[w].start as usize, st.hot[w + 1].start as usize);
                // Issue the parent loads of w's out-neighbors together so
                // that their cache misses overlap.
                let mut acc = 0u32;
                for &(_, x) in &adj[lo..hi] {
                    acc |= st.hot[x as usize].parent;
                }
                std::hint::black_box(acc);
                st.stack.push((w, lo, hi));
                obs.event(g, DfsEvent::TreeEdge(e), &st);
            } else {
                if st.non_tree(g, e, u, w, obs)? {
                    stats.contractions += 1;
                }
                obs.event(g, DfsEvent::NonTreeEdge(e), &st);
            }
        } else {
            st.stack.pop();
            if let Some(&(p, _, _)) = st.stack.last() {
                let cp = st.find(p);
                let cu = st.find(u);
                if cp != cu {
                    // Finishing a class that cannot reach back to its parent.
                    if st.slots[cu].to_root == NONE {
                        return Err(Error::NotStronglyConnected);
                    }
                    st.slots[cu].active = NONE;
                }
                st.slots[cp].active = MARK;
            }
            obs.event(g, DfsEvent::Finished(u), &st);
        }
    }
    if st.hot[..n].iter().any(|h| h.parent == NONE) {
        return Err(Error::NotStronglyConnected);
    }
    let root = st.find(0);
    // Sorting through a mask is linear and keeps the report's sort trivial.
    let mut mask = vec![false; g.m()];
    for &e in &st.contracted {
        mask[e.0] = true;
    }
    for v in 0..n {
        if v != root && st.hot[v].parent as usize == v {
            mask[st
                .from_root(v)
                .expect("visited class has a branching edge")
                .0] = true;
            mask[st.to_root(v).ok_or(Error::NotStronglyConnected)?.0] = true;
        }
    }
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| mask[e.0]).collect();
    stats.unions = st.unions;
    stats.finds = st.finds;
    let report = SolveReport::new("cc3-fast", kept, guarantee, start.elapsed())
        .with_lower_bound(Rational::from_integer(n as i128));
    Ok((report, stats))
}
