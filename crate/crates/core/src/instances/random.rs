use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::vc::UGraph;
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, DiGraph};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random Hamilton cycle plus `extra_edges` distinct random edges off the
/// cycle, in shuffled order. Deterministic in `seed`.
pub fn gen_random_strong(n: usize, extra_edges: usize, seed: u64) -> Result<DiGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let capacity = n * (n - 1) - n;
    if extra_edges > capacity {
        return Err(Error::InvalidParameter(format!(
            "{extra_edges} extra edges exceed the {capacity} available on {n} vertices"
        )));
    }
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    let mut used: HashSet<(usize, usize)> = edges.iter().copied().collect();
    if n == 2 {
        // The 2-cycle already uses both ordered pairs.
    } else if extra_edges * 2 > capacity {
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !used.contains(&(u, v)))
            .collect();
        rest.shuffle(&mut r);
        edges.extend(rest.into_iter().take(extra_edges));
    } else {
        while edges.len() < n + extra_edges {
            let u = r.gen_range(0..n);
            let v = r.gen_range(0..n);
            if u != v && used.insert((u, v)) {
                edges.push((u, v));
            }
        }
    }
    edges.shuffle(&mut r);
    DiGraph::from_edges(n, edges)
}

/// Every ordered pair independently with probability `p`, in shuffled order.
pub fn gen_random_digraph(n: usize, p: f64, seed: u64) -> DiGraph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && r.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    edges.shuffle(&mut r);
    DiGraph::from_edges(n, edges).expect("vertices in range")
}

/// Samples [`gen_random_digraph`] with derived seeds until the result is
/// strongly connected.
pub fn gen_random_strong_sampled(n: usize, p: f64, seed: u64) -> Result<DiGraph> {
    if n < 2 || p <= 0.0 {
        return Err(Error::InvalidParameter("need n >= 2 and p > 0".into()));
    }
    let mut r = rng(seed);
    for _ in 0..10_000 {
        let g = gen_random_digraph(n, p, r.gen());
        if is_strongly_connected(&g) {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no strongly connected sample for n={n}, p={p}"
    )))
}

/// A DAG: a random vertex order, forward pairs kept with probability `p`.
pub fn gen_random_dag(n: usize, p: f64, seed: u64) -> DiGraph {
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((order[i], order[j]));
            }
        }
    }
    edges.shuffle(&mut r);
    DiGraph::from_edges(n, edges).expect("vertices in range")
}

/// A connected undirected graph: a random spanning tree plus up to
/// `extra_edges` further edges, never exceeding `max_degree`.
pub fn gen_random_connected_ugraph(
    n: usize,
    extra_edges: usize,
    max_degree: usize,
    seed: u64,
) -> Result<UGraph> {
    if n < 2 || (max_degree < 2 && n > 2) {
        return Err(Error::InvalidParameter(
            "need n >= 2 and max degree >= 2 for a spanning tree".into(),
        ));
    }
    let mut r = rng(seed);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut used = HashSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    for i in 1..n {
        let v = order[i];
        let choices: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| deg[u] < max_degree)
            .collect();
        let u = *choices.choose(&mut r).ok_or_else(|| {
            Error::InvalidParameter("degree bound too tight for a spanning tree".into())
        })?;
        deg[u] += 1;
        deg[v] += 1;
        used.insert((u.min(v), u.max(v)));
        edges.push((u, v));
    }
    let mut attempts = 0;
    let mut added = 0;
    while added < extra_edges && attempts < 50 * (extra_edges + 1) {
        attempts += 1;
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        let key = (u.min(v), u.max(v));
        if u == v || deg[u] >= max_degree || deg[v] >= max_degree || !used.insert(key) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
        added += 1;
    }
    UGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_extra_is_a_cycle() {
        let g = gen_random_strong(7, 0, 1).unwrap();
        assert_eq!(g.m(), 7);
        assert!(is_strongly_connected(&g));
        assert!((0..7).all(|v| g.out_degree(v) == 1 && g.in_degree(v) == 1));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            gen_random_strong(30, 50, 9).unwrap(),
            gen_random_strong(30, 50, 9).unwrap()
        );
        assert_ne!(
            gen_random_strong(30, 50, 9).unwrap(),
            gen_random_strong(30, 50, 10).unwrap()
        );
    }

    #[test]
    fn eight_ten_forty_two() {
        let g = gen_random_strong(8, 10, 42).unwrap();
        assert!(is_strongly_connected(&g));
        assert_eq!(g.m(), 18);
    }

    #[test]
    fn dense_request_and_capacity() {
        let g = gen_random_strong(5, 15, 3).unwrap();
        assert_eq!(g.m(), 20);
        assert!(gen_random_strong(5, 16, 3).is_err());
        assert!(gen_random_strong(1, 0, 3).is_err());
    }

    #[test]
    fn dags_are_acyclic() {
        for s in 0..20 {
            assert!(gen_random_dag(9, 0.4, s).is_acyclic());
        }
    }

    #[test]
    fn ugraphs_respect_degree() {
        for s in 0..20 {
            let g = gen_random_connected_ugraph(12, 20, 7, s).unwrap();
            assert!(g.is_connected());
            assert!(g.max_degree() <= 7);
        }
    }
}
