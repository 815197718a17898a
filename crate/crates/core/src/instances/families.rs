use super::certificate::Certificate;
use crate::approx::Cycle;
use crate::error::{Error, Result};
use crate::graph::{DiGraph, EdgeId};
use crate::Rational;

/// A generated graph together with the structures that certify its optimum.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub graph: DiGraph,
    /// Hamilton cycle as edge ids in traversal order; the optimum is `n`.
    pub hamilton: Vec<EdgeId>,
    /// A 2-stable solution, for the 2-exchange family.
    pub stable: Option<Vec<EdgeId>>,
    /// Cycles that drive cycle contraction to its worst case, in order.
    pub script: Vec<Vec<EdgeId>>,
    pub k: Option<usize>,
    pub groups: usize,
}

impl FamilyInstance {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn certificate(&self) -> Certificate {
        Certificate {
            predicted_opt: Some(self.graph.n()),
            hamilton: Some(self.hamilton.clone()),
            stable: self.stable.clone(),
            cycles: self.script.clone(),
            ..Default::default()
        }
    }
}

/// Whether `cycle` is a simple cycle through every vertex of `g`.
pub fn is_hamilton_cycle(g: &DiGraph, cycle: &[EdgeId]) -> bool {
    cycle.len() == g.n()
        && Cycle {
            edges: cycle.to_vec(),
        }
        .validate(g)
        .is_ok()
}

/// Builds a graph from vertex pairs and looks up a vertex sequence as a
/// closed walk of edge ids.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn finish(self) -> Result<DiGraph> {
        let m = self.edges.len();
        let g = DiGraph::from_edges(self.n, self.edges)?;
        debug_assert_eq!(g.m(), m, "family layouts are simple graphs");
        Ok(g)
    }
}

fn walk(g: &DiGraph, order: &[usize]) -> Vec<EdgeId> {
    (0..order.len())
        .map(|i| {
            g.find_edge(order[i], order[(i + 1) % order.len()])
                .expect("layout contains every walk edge")
        })
        .collect()
}

/// Groups of a `(2k-2)`-cycle threaded with a `k`-cycle, chained by pairs
/// of opposite edges.
///
/// Group `j` uses vertices `j(2k-2) ..`: the `k`-cycle `c_0 .. c_{k-1}`
/// first, then `t_1 .. t_{k-2}` with `c_{i-1} -> t_i -> c_i`. Consecutive
/// groups are linked by `c_{k-2} -> c'_0` and `c'_{k-1} -> c_{k-1}`.
/// Contracting every `k`-cycle leaves only 2-cycles, so cycle contraction
/// following the script keeps all `(3k-2) g - 2` edges.
pub fn gen_threaded_cycles(k: usize, groups: usize) -> Result<FamilyInstance> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    if groups < 2 {
        return Err(Error::InvalidParameter(format!(
            "groups must be at least 2, got {groups}"
        )));
    }
    let size = 2 * k - 2;
    let c = |j: usize, i: usize| j * size + i;
    let t = |j: usize, i: usize| j * size + k + i - 1;
    let mut b = Builder {
        n: size * groups,
        edges: Vec::new(),
    };
    for j in 0..groups {
        for i in 0..k {
            b.edges.push((c(j, i), c(j, (i + 1) % k)));
        }
        for i in 1..=k - 2 {
            b.edges.push((c(j, i - 1), t(j, i)));
            b.edges.push((t(j, i), c(j, i)));
        }
        if j + 1 < groups {
            b.edges.push((c(j, k - 2), c(j + 1, 0)));
            b.edges.push((c(j + 1, k - 1), c(j, k - 1)));
        }
    }
    let g = b.finish()?;
    let mut order = Vec::with_capacity(g.n());
    for j in 0..groups {
        order.push(c(j, 0));
        for i in 1..=k - 2 {
            order.push(t(j, i));
            order.push(c(j, i));
        }
    }
    for j in (0..groups).rev() {
        order.push(c(j, k - 1));
    }
    let hamilton = walk(&g, &order);
    let script = (0..groups)
        .map(|j| {
            let ring: Vec<usize> = (0..k).map(|i| c(j, i)).collect();
            walk(&g, &ring)
        })
        .collect();
    Ok(FamilyInstance {
        graph: g,
        hamilton,
        stable: None,
        script,
        k: Some(k),
        groups,
    })
}

/// `1 + k / (2k - 2) - 2 / n`, the ratio the scripted run achieves.
pub fn threaded_cycles_ratio(k: usize, groups: usize) -> Rational {
    let k = k as i128;
    let n = (2 * k - 2) * groups as i128;
    Rational::from_integer(1) + Rational::new(k, 2 * k - 2) - Rational::new(2, n)
}

/// Hamiltonian graph on `4g` vertices with a recorded 2-stable solution of
/// `7g - 2` edges.
///
/// Group `j` has `a, b, c, d = 4j .. 4j+3`; the solution holds the triangle
/// `a -> b -> c -> a`, the pair `a <-> d` and the links `c_j <-> c_{j+1}`.
/// The rest of the graph is the Hamilton cycle
/// `a_0, (b_j, d_j, a_j) for middle groups, b_L, a_L, d_L, c_L,
/// c_{L-1} .. c_0, b_0, d_0`.
pub fn gen_two_exchange_worst(groups: usize) -> Result<FamilyInstance> {
    if groups < 2 {
        return Err(Error::InvalidParameter(format!(
            "groups must be at least 2, got {groups}"
        )));
    }
    let (a, b, c, d) = (
        |j: usize| 4 * j,
        |j: usize| 4 * j + 1,
        |j: usize| 4 * j + 2,
        |j: usize| 4 * j + 3,
    );
    let mut stable_pairs = Vec::new();
    for j in 0..groups {
        stable_pairs.extend([
            (a(j), b(j)),
            (b(j), c(j)),
            (c(j), a(j)),
            (a(j), d(j)),
            (d(j), a(j)),
        ]);
        if j + 1 < groups {
            stable_pairs.push((c(j), c(j + 1)));
            stable_pairs.push((c(j + 1), c(j)));
        }
    }
    let last = groups - 1;
    let mut order = vec![a(0)];
    for j in 1..last {
        order.extend([b(j), d(j), a(j)]);
    }
    order.extend([b(last), a(last), d(last), c(last)]);
    for j in (1..last).rev() {
        order.push(c(j));
    }
    order.extend([c(0), b(0), d(0)]);
    let mut pairs = stable_pairs.clone();
    for i in 0..order.len() {
        let p = (order[i], order[(i + 1) % order.len()]);
        if !pairs.contains(&p) {
            pairs.push(p);
        }
    }
    let g = Builder {
        n: 4 * groups,
        edges: pairs,
    }
    .finish()?;
    let stable = (0..stable_pairs.len()).map(EdgeId).collect();
    let hamilton = walk(&g, &order);
    Ok(FamilyInstance {
        graph: g,
        hamilton,
        stable: Some(stable),
        script: Vec::new(),
        k: None,
        groups,
    })
}
