use std::time::Instant;

use super::report::{Guarantee, SolveReport};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected_by, scc, DiGraph, EdgeId};
use crate::Rational;

/// Local search: while some `k` kept edges can be swapped for at most `k - 1`
/// original edges without losing strong connectivity, do so. Kept subsets
/// are scanned lexicographically, then replacement sets (smallest first,
/// lexicographic within a size), and the first improvement is taken.
///
/// `initial` defaults to every edge of `g`.
pub fn k_exchange(g: &DiGraph, k: usize, initial: Option<&[EdgeId]>) -> Result<SolveReport> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let start = Instant::now();
    let mut mask = match initial {
        Some(s) => g.edge_mask(s)?,
        None => vec![true; g.m()],
    };
    if !is_strongly_connected_by(g, |e| mask[e.0]) {
        return Err(Error::NotStronglyConnected);
    }
    loop {
        let step = if k == 2 {
            two_exchange_step(g, &mask)
        } else {
            generic_step(g, &mask, k)
        };
        match step {
            Some((out, added)) => {
                for e in out {
                    mask[e.0] = false;
                }
                for e in added {
                    mask[e.0] = true;
                }
            }
            None => break,
        }
    }
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| mask[e.0]).collect();
    // A k-stable set is 2-stable: a 2-for-1 swap is a k-for-(k-1) swap that
    // re-adds k - 2 of the removed edges.
    let guarantee = Guarantee::Ratio(Rational::new(7, 4));
    let name = if k == 2 {
        "2ex".to_string()
    } else {
        format!("{k}ex")
    };
    Ok(SolveReport::new(name, kept, guarantee, start.elapsed())
        .with_lower_bound(Rational::from_integer(g.n() as i128)))
}

type Step = (Vec<EdgeId>, Vec<EdgeId>);

/// For a fixed removed pair, one added edge restores strong connectivity iff
/// the remaining condensation has a single source `S` and a single sink `T`
/// and the edge runs from `T` to `S`.
fn two_exchange_step(g: &DiGraph, mask: &[bool]) -> Option<Step> {
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| mask[e.0]).collect();
    let mut work = mask.to_vec();
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            let (a, b) = (kept[i], kept[j]);
            work[a.0] = false;
            work[b.0] = false;
            let found = repair_with_one(g, &work);
            work[a.0] = true;
            work[b.0] = true;
            if let Some(add) = found {
                return Some((vec![a, b], add.into_iter().collect()));
            }
        }
    }
    None
}

/// `Some(None)` when `mask` is already strong, `Some(Some(e))` when adding
/// the smallest suitable `e` makes it strong.
fn repair_with_one(g: &DiGraph, mask: &[bool]) -> Option<Option<EdgeId>> {
    let spanning: Vec<(usize, usize)> = g
        .edge_ids()
        .filter(|e| mask[e.0])
        .map(|e| g.edge(e))
        .collect();
    let h = DiGraph::from_simple_edges(g.n(), spanning);
    let c = scc(&h);
    if c.count <= 1 {
        return Some(None);
    }
    let d = &c.condensation;
    let sources: Vec<usize> = (0..c.count).filter(|&x| d.in_degree(x) == 0).collect();
    let sinks: Vec<usize> = (0..c.count).filter(|&x| d.out_degree(x) == 0).collect();
    if sources.len() != 1 || sinks.len() != 1 {
        return None;
    }
    let (s, t) = (sources[0], sinks[0]);
    for &v in &c.members[t] {
        for &e in g.out_edges(v) {
            if !mask[e.0] && c.comp[g.head(e)] == s {
                return Some(Some(e));
            }
        }
    }
    None
}

fn generic_step(g: &DiGraph, mask: &[bool], k: usize) -> Option<Step> {
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| mask[e.0]).collect();
    let mut work = mask.to_vec();
    let mut found = None;
    for_each_subset(&kept, k, &mut |out| {
        for &e in out {
            work[e.0] = false;
        }
        let candidates: Vec<EdgeId> = g.edge_ids().filter(|e| !work[e.0]).collect();
        'sizes: for size in 0..k {
            let mut hit = None;
            for_each_subset(&candidates, size, &mut |add| {
                for &e in add {
                    work[e.0] = true;
                }
                let ok = is_strongly_connected_by(g, |e| work[e.0]);
                for &e in add {
                    work[e.0] = false;
                }
                if ok {
                    hit = Some(add.to_vec());
                }
                ok
            });
            if let Some(add) = hit {
                found = Some((out.to_vec(), add));
                break 'sizes;
            }
        }
        for &e in out {
            work[e.0] = true;
        }
        found.is_some()
    });
    found
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order until
/// it returns true.
fn for_each_subset<F>(items: &[EdgeId], size: usize, f: &mut F) -> bool
where
    F: FnMut(&[EdgeId]) -> bool,
{
    fn rec<F: FnMut(&[EdgeId]) -> bool>(
        items: &[EdgeId],
        from: usize,
        size: usize,
        cur: &mut Vec<EdgeId>,
        f: &mut F,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        let need = size - cur.len();
        for i in from..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            if rec(items, i + 1, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if size > items.len() {
        return false;
    }
    rec(items, 0, size, &mut Vec::with_capacity(size), f)
}

/// Exhaustive 2-stability test: no pair of kept edges can be swapped for
/// zero or one original edge while staying strongly connected. Independent
/// of the condensation shortcut used by [`k_exchange`].
pub fn is_two_stable(g: &DiGraph, kept: &[EdgeId]) -> Result<bool> {
    let mut work = g.edge_mask(kept)?;
    if !is_strongly_connected_by(g, |e| work[e.0]) {
        return Err(Error::NotStronglyConnected);
    }
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| work[e.0]).collect();
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            work[kept[i].0] = false;
            work[kept[j].0] = false;
            let mut improvable = is_strongly_connected_by(g, |e| work[e.0]);
            for c in g.edge_ids() {
                if improvable {
                    break;
                }
                if work[c.0] {
                    continue;
                }
                work[c.0] = true;
                improvable = is_strongly_connected_by(g, |e| work[e.0]);
                work[c.0] = false;
            }
            work[kept[i].0] = true;
            work[kept[j].0] = true;
            if improvable {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
