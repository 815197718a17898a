//! Vertex cover in graphs of degree at most seven, reduced to minimum SCSS
//! on digraphs whose cycles have at most 17 edges.

use std::collections::HashSet;

use super::certificate::{Certificate, Witness};
use super::coloring::edge_color;
use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{is_strongly_connected_subset, parse_edge_list, DiGraph, EdgeId};

/// Largest degree the reduction accepts.
pub const VC_MAX_DEGREE: usize = 7;

/// Simple undirected graph; edges are stored as `(min, max)` in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UGraph {
    /// Rejects loops, repeated edges and out-of-range vertices.
    pub fn new<I>(n: usize, edges: I) -> Result<UGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidParameter(format!(
                    "repeated edge {{{u}, {v}}}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push(key);
        }
        Ok(UGraph {
            n,
            edges: list,
            adj,
        })
    }

    /// Parses the edge-list format; the file must carry a `# undirected`
    /// comment.
    pub fn parse(text: &str) -> Result<UGraph> {
        let list = parse_edge_list(text)?;
        if !list
            .comments
            .iter()
            .any(|c| c.eq_ignore_ascii_case("undirected"))
        {
            return Err(Error::parse(
                1,
                ParseErrorKind::Other("missing \"# undirected\" tag".into()),
            ));
        }
        UGraph::new(list.n, list.edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# undirected\n{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &v in cover {
            if v >= self.n {
                return false;
            }
            inside[v] = true;
        }
        self.edges.iter().all(|&(u, v)| inside[u] || inside[v])
    }
}

/// Minimum vertex cover by branching on an uncovered edge. Exponential in
/// the cover size; meant for small graphs.
pub fn min_vertex_cover(g: &UGraph) -> Vec<usize> {
    fn rec(
        g: &UGraph,
        inside: &mut Vec<bool>,
        size: usize,
        best: &mut Vec<usize>,
        best_size: &mut usize,
    ) {
        if size >= *best_size {
            return;
        }
        let Some(&(u, v)) = g.edges.iter().find(|&&(u, v)| !inside[u] && !inside[v]) else {
            *best_size = size;
            *best = (0..g.n).filter(|&x| inside[x]).collect();
            return;
        };
        for x in [u, v] {
            inside[x] = true;
            rec(g, inside, size + 1, best, best_size);
            inside[x] = false;
        }
    }
    let mut best: Vec<usize> = (0..g.n).filter(|&v| g.degree(v) > 0).collect();
    let mut best_size = best.len();
    rec(g, &mut vec![false; g.n], 0, &mut best, &mut best_size);
    best
}

/// One cover-testing gadget: the pair `x, y` added for an undirected edge
/// `{u, v}` (with `u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gadget {
    pub u: usize,
    pub v: usize,
    pub color: usize,
    pub x: usize,
    pub y: usize,
    /// `cur(u) -> x`, labeled `u+`.
    pub u_plus: EdgeId,
    /// `y -> x`, labeled `u-`.
    pub u_minus: EdgeId,
    /// `cur(v) -> y`, labeled `v+`.
    pub v_plus: EdgeId,
    /// `x -> y`, labeled `v-`.
    pub v_minus: EdgeId,
}

#[derive(Debug, Clone)]
pub struct VcInstance {
    pub graph: DiGraph,
    pub source: UGraph,
    /// Color of every undirected edge, by index.
    pub colors: Vec<usize>,
    /// Gadgets in construction order (non-decreasing color).
    pub gadgets: Vec<Gadget>,
    /// `plus[w]`: the `deg(w) + 1` edges labeled `w+`, along `w`'s path.
    pub plus: Vec<Vec<EdgeId>>,
    /// `minus[w]`: the `deg(w)` edges labeled `w-`.
    pub minus: Vec<Vec<EdgeId>>,
    pub certificate: Certificate,
}

pub const ROOT: usize = 0;

/// Builds the digraph `D` on `2m + 1` vertices. Every vertex of the
/// undirected graph starts its path at the root; gadgets are appended in
/// order of non-decreasing edge color. If `cover` is given it is recorded as
/// the witness and fixes `predicted_opt = 2m + |cover|`; otherwise a minimum
/// cover is computed when the graph has at most 40 vertices.
pub fn reduce_vc_to_scss17(g: &UGraph, cover: Option<&[usize]>) -> Result<VcInstance> {
    if g.m() == 0 || !g.is_connected() {
        return Err(Error::InvalidParameter(
            "graph must be connected with at least one edge".into(),
        ));
    }
    if g.max_degree() > VC_MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "maximum degree {} exceeds {VC_MAX_DEGREE}",
            g.max_degree()
        )));
    }
    let colors = edge_color(g);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&i| (colors[i], i));

    let n = 2 * g.m() + 1;
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    let mut plus = vec![Vec::new(); g.n()];
    let mut minus = vec![Vec::new(); g.n()];
    let mut cur = vec![ROOT; g.n()];
    let mut gadgets = Vec::new();
    let mut add = |pairs: &mut Vec<(usize, usize)>, a: usize, b: usize, tag: String| {
        pairs.push((a, b));
        labels.push((EdgeId(pairs.len() - 1), tag));
        EdgeId(pairs.len() - 1)
    };
    for (slot, &i) in order.iter().enumerate() {
        let (u, v) = g.edges()[i];
        let (x, y) = (1 + 2 * slot, 2 + 2 * slot);
        let u_plus = add(&mut pairs, cur[u], x, format!("v{u}+ gadget {i}"));
        let u_minus = add(&mut pairs, y, x, format!("v{u}- gadget {i}"));
        let v_plus = add(&mut pairs, cur[v], y, format!("v{v}+ gadget {i}"));
        let v_minus = add(&mut pairs, x, y, format!("v{v}- gadget {i}"));
        plus[u].push(u_plus);
        minus[u].push(u_minus);
        plus[v].push(v_plus);
        minus[v].push(v_minus);
        cur[u] = y;
        cur[v] = x;
        gadgets.push(Gadget {
            u,
            v,
            color: colors[i],
            x,
            y,
            u_plus,
            u_minus,
            v_plus,
            v_minus,
        });
    }
    for w in 0..g.n() {
        let e = add(&mut pairs, cur[w], ROOT, format!("v{w}+ return"));
        plus[w].push(e);
    }
    let graph = DiGraph::from_edges(n, pairs)?;
    debug_assert_eq!(graph.m(), 4 * g.m() + g.n());

    let witness = match cover {
        Some(c) => {
            if !g.is_vertex_cover(c) {
                return Err(Error::InvalidCertificate(
                    "witness is not a vertex cover".into(),
                ));
            }
            Some(c.to_vec())
        }
        None if g.n() <= 40 => Some(min_vertex_cover(g)),
        None => None,
    };
    let certificate = Certificate {
        predicted_opt: witness.as_ref().map(|c| 2 * g.m() + c.len()),
        witness: witness.map(Witness::Cover).unwrap_or_default(),
        labels,
        ..Default::default()
    };
    Ok(VcInstance {
        graph,
        source: g.clone(),
        colors,
        gadgets,
        plus,
        minus,
        certificate,
    })
}

impl VcInstance {
    pub fn colors_used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// All `w+` edges for cover vertices, all `w-` edges otherwise:
    /// `2m + |cover|` edges.
    pub fn cover_to_scss(&self, cover: &[usize]) -> Result<Vec<EdgeId>> {
        if !self.source.is_vertex_cover(cover) {
            return Err(Error::InvalidCertificate("not a vertex cover".into()));
        }
        let mut inside = vec![false; self.source.n()];
        for &v in cover {
            inside[v] = true;
        }
        let mut kept: Vec<EdgeId> = (0..self.source.n())
            .flat_map(|w| {
                if inside[w] {
                    &self.plus[w]
                } else {
                    &self.minus[w]
                }
            })
            .copied()
            .collect();
        kept.sort_unstable();
        Ok(kept)
    }

    /// Turns any SCSS of `D` into a vertex cover of at most `|kept| - 2m`
    /// vertices. The SCSS is first normalized so that every non-root vertex
    /// keeps exactly one edge in and one edge out; then the vertices whose
    /// `+` edges all survive form the cover.
    pub fn scss_to_cover(&self, kept: &[EdgeId]) -> Result<Vec<usize>> {
        let canon = self.canonicalize(kept)?;
        let mut mask = vec![false; self.graph.m()];
        for &e in &canon {
            mask[e.0] = true;
        }
        let cover: Vec<usize> = (0..self.source.n())
            .filter(|&w| self.plus[w].iter().all(|e| mask[e.0]))
            .collect();
        if !self.source.is_vertex_cover(&cover) {
            return Err(Error::InvalidCertificate(
                "normalized SCSS does not yield a cover".into(),
            ));
        }
        Ok(cover)
    }

    /// Repeatedly replaces a `-` edge by a `+` edge at a vertex with two
    /// kept edges in or two kept edges out. Never grows the set.
    pub fn canonicalize(&self, kept: &[EdgeId]) -> Result<Vec<EdgeId>> {
        let g = &self.graph;
        if !is_strongly_connected_subset(g, kept)? {
            return Err(Error::NotStronglyConnected);
        }
        let mut mask = g.edge_mask(kept)?;
        // Each vertex x of a gadget has exactly one `-` edge in and one out,
        // both to its partner, and one `+` edge in and one out.
        let mut minus_out = vec![None; g.n()];
        let mut minus_in = vec![None; g.n()];
        let mut plus_out = vec![None; g.n()];
        let mut plus_in = vec![None; g.n()];
        for gd in &self.gadgets {
            minus_out[gd.y] = Some(gd.u_minus);
            minus_in[gd.x] = Some(gd.u_minus);
            minus_out[gd.x] = Some(gd.v_minus);
            minus_in[gd.y] = Some(gd.v_minus);
            plus_in[gd.x] = Some(gd.u_plus);
            plus_in[gd.y] = Some(gd.v_plus);
        }
        for w in 0..self.source.n() {
            for &e in &self.plus[w] {
                let t = g.tail(e);
                if t != ROOT {
                    plus_out[t] = Some(e);
                }
            }
        }
        loop {
            let mut changed = false;
            for a in 1..g.n() {
                let (pin, min) = (plus_in[a].unwrap(), minus_in[a].unwrap());
                if mask[pin.0] && mask[min.0] {
                    // Drop the `-` edge (b, a); give b its `+` edge out.
                    mask[min.0] = false;
                    let b = g.tail(min);
                    mask[plus_out[b].unwrap().0] = true;
                    changed = true;
                }
                let (pout, mout) = (plus_out[a].unwrap(), minus_out[a].unwrap());
                if mask[pout.0] && mask[mout.0] {
                    // Drop the `-` edge (a, b); give b its `+` edge in.
                    mask[mout.0] = false;
                    let b = g.head(mout);
                    mask[plus_in[b].unwrap().0] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(g.edge_ids().filter(|e| mask[e.0]).collect())
    }
}
