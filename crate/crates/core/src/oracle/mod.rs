//! Exact solvers and lower bounds for desk-scale instances.

mod bounds;
mod exact;
mod longest;

pub use bounds::{bound_report, contraction_bound_check, cycle_lemma_bound, BoundReport};
pub use exact::{exact_meg, exact_scss, exact_scss_report, exact_scss_with};
pub use longest::{has_cycle_longer_than, longest_cycle, longest_cycle_with};

use crate::graph::DEFAULT_CLOSURE_CAP;

/// Environment variable overriding the exact-solver vertex limit.
pub const ORACLE_MAX_N_ENV: &str = "SCSS_ORACLE_MAX_N";

/// Hard ceiling of the longest-cycle search, which tracks vertices in a
/// 64-bit mask.
pub const LONGEST_CYCLE_HARD_MAX: usize = 64;

/// Size guards for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest strong component handed to the exact SCSS search.
    pub exact_max_n: usize,
    /// Largest graph handed to the longest-cycle search.
    pub longest_cycle_max_n: usize,
    pub closure_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            exact_max_n: 10,
            longest_cycle_max_n: 20,
            closure_cap: DEFAULT_CLOSURE_CAP,
        }
    }
}

impl OracleLimits {
    /// Defaults, with the exact limit taken from `SCSS_ORACLE_MAX_N` if set.
    /// The longest-cycle limit is raised along with it when needed.
    pub fn from_env() -> Self {
        let mut l = OracleLimits::default();
        if let Some(v) = std::env::var(ORACLE_MAX_N_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            l.exact_max_n = v;
            l.longest_cycle_max_n = l.longest_cycle_max_n.max(v).min(LONGEST_CYCLE_HARD_MAX);
        }
        l
    }

    pub fn with_exact_max_n(mut self, n: usize) -> Self {
        self.exact_max_n = n;
        self
    }

    pub fn with_longest_cycle_max_n(mut self, n: usize) -> Self {
        self.longest_cycle_max_n = n.min(LONGEST_CYCLE_HARD_MAX);
        self
    }
}
