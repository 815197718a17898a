use super::{exact_scss_with, longest_cycle_with, OracleLimits};
use crate::error::{Error, Result};
use crate::graph::{contract, is_strongly_connected, DiGraph, EdgeId};
use crate::Rational;

/// `l / (l - 1) * (n - 1)`: no strongly connected spanning subgraph of an
/// `n`-vertex graph whose longest cycle has `l` edges is smaller.
pub fn cycle_lemma_bound(n: usize, max_cycle: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if max_cycle < 2 {
        return Err(Error::InvalidParameter(format!(
            "longest cycle must be at least 2, got {max_cycle}"
        )));
    }
    let l = max_cycle as i128;
    Ok(Rational::new(l, l - 1) * Rational::from_integer(n as i128 - 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub max_cycle_len: usize,
    /// `None` when the graph has no cycle.
    pub cycle_lemma_bound: Option<Rational>,
    /// Best integer lower bound: the ceiling of the cycle bound, or `n`.
    pub ceiling: usize,
    pub trivial_bound: usize,
}

pub fn bound_report(g: &DiGraph, limits: &OracleLimits) -> Result<BoundReport> {
    let n = g.n();
    let l = longest_cycle_with(g, limits)?;
    let bound = if l >= 2 {
        Some(cycle_lemma_bound(n, l)?)
    } else {
        None
    };
    let ceiling = bound
        .map(|b| b.ceil().to_integer() as usize)
        .unwrap_or(n)
        .max(if n > 1 { n } else { 0 });
    Ok(BoundReport {
        n,
        max_cycle_len: l,
        cycle_lemma_bound: bound,
        ceiling,
        trivial_bound: n,
    })
}

/// Computes both optima exactly and reports whether `Opt(g) >= Opt(g / s)`.
pub fn contraction_bound_check(g: &DiGraph, s: &[EdgeId], limits: &OracleLimits) -> Result<bool> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let q = contract(g, s)?.quotient(g);
    let whole = exact_scss_with(g, limits)?.len();
    let quotient = exact_scss_with(&q.graph, limits)?.len();
    Ok(whole >= quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_bound_values() {
        assert_eq!(cycle_lemma_bound(5, 2).unwrap(), Rational::from_integer(8));
        assert_eq!(cycle_lemma_bound(6, 6).unwrap(), Rational::from_integer(6));
        let b = cycle_lemma_bound(4, 3).unwrap();
        assert_eq!(b, Rational::new(9, 2));
        assert_eq!(b.ceil().to_integer(), 5);
        assert!(cycle_lemma_bound(4, 1).is_err());
    }

    #[test]
    fn report_on_cycle() {
        let g = DiGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let r = bound_report(&g, &OracleLimits::default()).unwrap();
        assert_eq!(r.max_cycle_len, 6);
        assert_eq!(r.ceiling, 6);
    }

    #[test]
    fn contraction_on_cycle() {
        let g = DiGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let l = OracleLimits::default();
        assert!(contraction_bound_check(&g, &[], &l).unwrap());
        assert!(contraction_bound_check(&g, &[EdgeId(0)], &l).unwrap());
    }
}
