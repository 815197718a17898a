use std::fmt;
use std::time::Duration;

use num_traits::ToPrimitive;

use crate::graph::EdgeId;
use crate::Rational;

/// What a solver promises about its output size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    /// At most `ceil(ratio * opt)` edges.
    Ratio(Rational),
    /// At most this many edges, regardless of the optimum.
    Absolute(usize),
    Exact,
}

impl Guarantee {
    /// Largest output size allowed when the optimum is `opt`.
    pub fn allowed(&self, opt: usize) -> usize {
        match *self {
            Guarantee::Ratio(r) => ceil_mul(r, opt),
            Guarantee::Absolute(b) => b,
            Guarantee::Exact => opt,
        }
    }

    pub fn ratio(&self) -> Option<Rational> {
        match *self {
            Guarantee::Ratio(r) => Some(r),
            Guarantee::Exact => Some(Rational::from_integer(1)),
            Guarantee::Absolute(_) => None,
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guarantee::Ratio(r) => write!(f, "{r}"),
            Guarantee::Absolute(b) => write!(f, "<={b}"),
            Guarantee::Exact => write!(f, "1"),
        }
    }
}

/// `ceil(r * x)` in exact arithmetic.
pub fn ceil_mul(r: Rational, x: usize) -> usize {
    (r * Rational::from_integer(x as i128))
        .ceil()
        .to_integer()
        .to_usize()
        .expect("non-negative bound")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub algorithm: String,
    /// Kept edges, ascending.
    pub kept: Vec<EdgeId>,
    pub size: usize,
    pub lower_bound: Option<Rational>,
    pub guarantee: Guarantee,
    pub elapsed: Duration,
}

impl SolveReport {
    pub(crate) fn new(
        algorithm: impl Into<String>,
        mut kept: Vec<EdgeId>,
        guarantee: Guarantee,
        elapsed: Duration,
    ) -> Self {
        kept.sort_unstable();
        kept.dedup();
        SolveReport {
            algorithm: algorithm.into(),
            size: kept.len(),
            kept,
            lower_bound: None,
            guarantee,
            elapsed,
        }
    }

    pub fn with_lower_bound(mut self, lb: Rational) -> Self {
        self.lower_bound = Some(lb);
        self
    }

    /// `size / lower_bound`, when a positive lower bound is known.
    pub fn ratio_to_bound(&self) -> Option<Rational> {
        let lb = self.lower_bound?;
        (lb > Rational::from_integer(0)).then(|| Rational::from_integer(self.size as i128) / lb)
    }

    pub fn millis(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1000.0
    }

    pub fn ratio_to_bound_f64(&self) -> Option<f64> {
        self.ratio_to_bound().and_then(|r| r.to_f64())
    }
}
