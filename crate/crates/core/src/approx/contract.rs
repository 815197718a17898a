use std::collections::VecDeque;
use std::time::Instant;

use super::cycles::{find_cycle_at_least, validate_cycle_by};
use super::report::{Guarantee, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, ContractionState, DiGraph, EdgeId, Quotient};
use crate::Rational;

/// Largest `k` accepted by [`c_k_guarantee`]; beyond it the exact sum no
/// longer fits the rational type.
pub const MAX_K: usize = 30;

/// `1/(k-1) + sum_{i=1}^{k-1} 1/i^2`, exactly.
pub fn c_k_guarantee(k: usize) -> Result<Rational> {
    if !(2..=MAX_K).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "k must be in 2..={MAX_K}, got {k}"
        )));
    }
    let mut c = Rational::new(1, k as i128 - 1);
    for i in 1..k as i128 {
        c += Rational::new(1, i * i);
    }
    Ok(c)
}

/// Chooses which cycle to contract next.
pub trait CycleSelector {
    /// A cycle with at least `min_len` edges in the quotient, given as
    /// original edge ids, or `None` if none exists.
    fn select(&mut self, g: &DiGraph, q: &Quotient, min_len: usize) -> Result<Option<Vec<EdgeId>>>;
}

/// First cycle in path-enumeration order.
#[derive(Debug, Default, Clone, Copy)]
pub struct FirstFound;

impl CycleSelector for FirstFound {
    fn select(
        &mut self,
        _g: &DiGraph,
        q: &Quotient,
        min_len: usize,
    ) -> Result<Option<Vec<EdgeId>>> {
        Ok(find_cycle_at_least(&q.graph, min_len).map(|c| q.to_original(&c.edges)))
    }
}

/// Replays a fixed list of cycles, then falls back to [`FirstFound`].
///
/// A scripted cycle shorter than the current phase length waits for a later
/// phase. A cycle that is not simple in the current quotient is an error.
#[derive(Debug, Clone, Default)]
pub struct Scripted {
    pending: VecDeque<Vec<EdgeId>>,
}

impl Scripted {
    pub fn new(cycles: Vec<Vec<EdgeId>>) -> Self {
        Scripted {
            pending: cycles.into(),
        }
    }

    pub fn remaining(&self) -> usize {
        self.pending.len()
    }
}

impl CycleSelector for Scripted {
    fn select(&mut self, g: &DiGraph, q: &Quotient, min_len: usize) -> Result<Option<Vec<EdgeId>>> {
        if let Some(next) = self.pending.front() {
            validate_cycle_by(next, |e| {
                g.check_edge(e)?;
                let (u, v) = g.edge(e);
                Ok((q.class_of[u], q.class_of[v]))
            })?;
            if next.len() >= min_len {
                return Ok(self.pending.pop_front());
            }
        }
        FirstFound.select(g, q, min_len)
    }
}

/// One contraction performed by [`contract_cycles_k_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    /// Minimum cycle length of the phase the contraction belongs to.
    pub phase: usize,
    pub cycle: Vec<EdgeId>,
}

#[derive(Debug, Clone)]
pub struct CcRun {
    pub report: SolveReport,
    pub steps: Vec<ContractionStep>,
}

pub fn contract_cycles_k(g: &DiGraph, k: usize) -> Result<SolveReport> {
    contract_cycles_k_with(g, k, &mut FirstFound).map(|r| r.report)
}

/// Contracts cycles of at least `i` edges for `i = k, k-1, ..., 2` until the
/// quotient is a single vertex; the output is every contracted edge.
pub fn contract_cycles_k_with(
    g: &DiGraph,
    k: usize,
    selector: &mut dyn CycleSelector,
) -> Result<CcRun> {
    let ratio = c_k_guarantee(k)?;
    let start = Instant::now();
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut state = ContractionState::new(g.n());
    let mut steps = Vec::new();
    for phase in (2..=k).rev() {
        loop {
            if state.class_count() <= 1 {
                break;
            }
            let q = state.quotient(g);
            let Some(cycle) = selector.select(g, &q, phase)? else {
                break;
            };
            state.contract_edges(g, &cycle)?;
            debug_assert!(is_strongly_connected(&state.quotient(g).graph));
            steps.push(ContractionStep { phase, cycle });
        }
    }
    debug_assert_eq!(state.class_count(), g.n().min(1));
    let kept: Vec<EdgeId> = state.contracted().iter().copied().collect();
    let report = SolveReport::new(
        format!("cc-k:{k}"),
        kept,
        Guarantee::Ratio(ratio),
        start.elapsed(),
    )
    .with_lower_bound(Rational::from_integer(g.n() as i128));
    Ok(CcRun { report, steps })
}
