//! Python bindings. Graphs cross the boundary as `(n, [(u, v), ...])`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use scss_core::approx::Algorithm;
use scss_core::graph::is_strongly_connected_subset;
use scss_core::instances::{gen_threaded_cycles, gen_two_exchange_worst};
use scss_core::meg::{solve_meg_with, verify_equivalent};
use scss_core::oracle::{bound_report, exact_scss_with, OracleLimits};
use scss_core::{DiGraph, EdgeId, Error};

type Edges = Vec<(usize, usize)>;

fn err(e: Error) -> PyErr {
    match e {
        Error::GuardExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn graph(n: usize, edges: Edges) -> PyResult<DiGraph> {
    DiGraph::from_edges(n, edges).map_err(err)
}

fn pairs(g: &DiGraph, kept: &[EdgeId]) -> Edges {
    kept.iter().map(|&e| g.edge(e)).collect()
}

fn ids(g: &DiGraph, kept: &[(usize, usize)]) -> PyResult<Vec<EdgeId>> {
    kept.iter()
        .map(|&(u, v)| {
            g.find_edge(u, v).ok_or_else(|| {
                PyValueError::new_err(format!("edge ({u}, {v}) is not in the graph"))
            })
        })
        .collect()
}

fn algorithm(alg: &str) -> PyResult<Algorithm> {
    alg.parse().map_err(err)
}

/// Strongly connected spanning subgraph of a strongly connected graph.
#[pyfunction]
#[pyo3(signature = (n, edges, alg = "cc3"))]
fn solve(n: usize, edges: Edges, alg: &str) -> PyResult<Edges> {
    let g = graph(n, edges)?;
    let r = algorithm(alg)?
        .run_with(&g, &OracleLimits::from_env())
        .map_err(err)?;
    Ok(pairs(&g, &r.kept))
}

/// Equivalent subgraph of any graph.
#[pyfunction]
#[pyo3(signature = (n, edges, alg = "cc3"))]
fn solve_meg(n: usize, edges: Edges, alg: &str) -> PyResult<Edges> {
    let g = graph(n, edges)?;
    let sol = solve_meg_with(&g, algorithm(alg)?, &OracleLimits::from_env()).map_err(err)?;
    Ok(pairs(&g, &sol.kept))
}

#[pyfunction]
fn exact(n: usize, edges: Edges) -> PyResult<Edges> {
    let g = graph(n, edges)?;
    let kept = exact_scss_with(&g, &OracleLimits::from_env()).map_err(err)?;
    Ok(pairs(&g, &kept))
}

/// Whether `kept` preserves reachability of the graph.
#[pyfunction]
fn is_equivalent(n: usize, edges: Edges, kept: Edges) -> PyResult<bool> {
    let g = graph(n, edges)?;
    verify_equivalent(&g, &ids(&g, &kept)?).map_err(err)
}

#[pyfunction]
fn is_strongly_connected(n: usize, edges: Edges, kept: Edges) -> PyResult<bool> {
    let g = graph(n, edges)?;
    is_strongly_connected_subset(&g, &ids(&g, &kept)?).map_err(err)
}

/// `(longest cycle, bound as (numerator, denominator) or None, ceiling)`.
#[pyfunction]
fn bound(n: usize, edges: Edges) -> PyResult<(usize, Option<(i128, i128)>, usize)> {
    let g = graph(n, edges)?;
    let b = bound_report(&g, &OracleLimits::from_env()).map_err(err)?;
    let frac = b.cycle_lemma_bound.map(|r| (*r.numer(), *r.denom()));
    Ok((b.max_cycle_len, frac, b.ceiling))
}

#[pyfunction]
fn gen_threaded(k: usize, groups: usize) -> PyResult<(usize, Edges)> {
    let f = gen_threaded_cycles(k, groups).map_err(err)?;
    Ok((f.n(), f.graph.edge_pairs().to_vec()))
}

#[pyfunction]
fn gen_ex2worst(groups: usize) -> PyResult<(usize, Edges)> {
    let f = gen_two_exchange_worst(groups).map_err(err)?;
    Ok((f.n(), f.graph.edge_pairs().to_vec()))
}

#[pymodule]
fn scss_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_meg, m)?)?;
    m.add_function(wrap_pyfunction!(exact, m)?)?;
    m.add_function(wrap_pyfunction!(is_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(is_strongly_connected, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(gen_threaded, m)?)?;
    m.add_function(wrap_pyfunction!(gen_ex2worst, m)?)?;
    Ok(())
}
