//! Approximation algorithms for the minimum strongly connected spanning
//! subgraph.

mod baselines;
mod contract;
mod cycles;
mod exchange;
mod fast;
mod report;

use std::fmt;
use std::str::FromStr;

pub use baselines::{branching_baseline, is_minimal, minimal_scss};
pub use contract::{
    c_k_guarantee, contract_cycles_k, contract_cycles_k_with, CcRun, ContractionStep,
    CycleSelector, FirstFound, Scripted, MAX_K,
};
pub use cycles::{find_cycle_at_least, Cycle};
pub use exchange::{is_two_stable, k_exchange};
pub use fast::{
    contract_cycles_3_fast, contract_cycles_3_fast_observed, ActiveLink, DfsEvent, DfsObserver,
    DfsState, FastStats,
};
pub use report::{ceil_mul, Guarantee, SolveReport};

use crate::error::{Error, Result};
use crate::graph::DiGraph;
use crate::oracle::{exact_scss_report, OracleLimits};

/// Largest `k` the command line accepts for `cc-k`.
pub const CLI_MAX_K: usize = 6;

/// Solver selector for a strongly connected input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Cc3Fast,
    CcK(usize),
    TwoExchange,
    Branching { root: usize },
    Minimal,
    Exact,
}

impl Algorithm {
    pub fn run(&self, g: &DiGraph) -> Result<SolveReport> {
        self.run_with(g, &OracleLimits::default())
    }

    pub fn run_with(&self, g: &DiGraph, limits: &OracleLimits) -> Result<SolveReport> {
        match *self {
            Algorithm::Cc3Fast => contract_cycles_3_fast(g),
            Algorithm::CcK(k) => contract_cycles_k(g, k),
            Algorithm::TwoExchange => k_exchange(g, 2, None),
            Algorithm::Branching { root } => {
                branching_baseline(g, root.min(g.n().saturating_sub(1)))
            }
            Algorithm::Minimal => minimal_scss(g),
            Algorithm::Exact => exact_scss_report(g, limits),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Cc3Fast => f.write_str("cc3-fast"),
            Algorithm::CcK(k) => write!(f, "cc-k:{k}"),
            Algorithm::TwoExchange => f.write_str("2ex"),
            Algorithm::Branching { .. } => f.write_str("branching"),
            Algorithm::Minimal => f.write_str("minimal"),
            Algorithm::Exact => f.write_str("exact"),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    /// Accepts `cc3`, `cc3-fast`, `cc-k:<k>`, `2ex`, `branching`, `minimal`
    /// and `exact`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cc3" | "cc3-fast" => Algorithm::Cc3Fast,
            "2ex" => Algorithm::TwoExchange,
            "branching" => Algorithm::Branching { root: 0 },
            "minimal" => Algorithm::Minimal,
            "exact" => Algorithm::Exact,
            _ => {
                let k = s
                    .strip_prefix("cc-k:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))?;
                if !(2..=CLI_MAX_K).contains(&k) {
                    return Err(Error::InvalidParameter(format!(
                        "cc-k needs 2 <= k <= {CLI_MAX_K}, got {k}"
                    )));
                }
                Algorithm::CcK(k)
            }
        })
    }
}
