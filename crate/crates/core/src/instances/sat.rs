//! CNF satisfiability reduced to minimum SCSS on digraphs whose cycles have
//! at most five edges.
//!
//! Layout: root `0`, one vertex per clause, then one gadget per variable.
//! A variable with `q = max(#pos, #neg, 1)` occurrence slots gets a ring of
//! `3q` vertices `s_j, y_j, z_j`:
//!
//! ```text
//! root -> s_j            entry, forced
//! s_j  -> y_j            clockwise
//! s_j  -> z_{j-1 mod q}  counter-clockwise
//! y_j  -> z_j            clockwise
//! z_j  -> y_j            counter-clockwise
//! y_j  -> pos[j] | root  exit, labeled +
//! z_j  -> neg[j] | root  exit, labeled -
//! clause -> root
//! ```
//!
//! Every non-root vertex needs an out-edge and every `s_j` needs its entry,
//! so any SCSS has at least `N - 1 + d` edges, `d` being the number of
//! entries. Meeting that bound forces out-degree one everywhere, which in
//! turn forces each ring to be all clockwise (false, `-` exits live) or all
//! counter-clockwise (true, `+` exits live).

use super::certificate::{Certificate, Witness};
use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{is_strongly_connected_subset, DiGraph, EdgeId};

/// Formulas larger than this are not brute-forced for a witness.
pub const SAT_BRUTE_FORCE_MAX_VARS: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    /// DIMACS literals: `v` or `-v` for variable `v` in `1..=vars`.
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula> {
        for c in &clauses {
            if c.is_empty() {
                return Err(Error::InvalidParameter("empty clause".into()));
            }
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > vars {
                    return Err(Error::InvalidParameter(format!("literal {l} out of range")));
                }
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    /// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header and
    /// clauses terminated by `0` (possibly spanning lines).
    pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        let mut last = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last = line;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            if t.starts_with('%') {
                break;
            }
            if t.starts_with('p') {
                let toks: Vec<&str> = t.split_whitespace().collect();
                if header.is_some() || toks.len() != 4 || toks[1] != "cnf" {
                    return Err(Error::parse(line, ParseErrorKind::MalformedHeader));
                }
                let num = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(line, ParseErrorKind::NonInteger(s.into())))
                };
                header = Some((num(toks[2])?, num(toks[3])?, line));
                continue;
            }
            let Some((vars, _, _)) = header else {
                return Err(Error::parse(line, ParseErrorKind::MissingHeader));
            };
            for tok in t.split_whitespace() {
                let l: i32 = tok
                    .parse()
                    .map_err(|_| Error::parse(line, ParseErrorKind::NonInteger(tok.into())))?;
                if l == 0 {
                    if cur.is_empty() {
                        return Err(Error::parse(
                            line,
                            ParseErrorKind::Other("empty clause".into()),
                        ));
                    }
                    clauses.push(std::mem::take(&mut cur));
                } else if l.unsigned_abs() as usize > vars {
                    return Err(Error::parse(
                        line,
                        ParseErrorKind::VertexOutOfRange {
                            vertex: l.unsigned_abs() as usize,
                            n: vars + 1,
                        },
                    ));
                } else {
                    cur.push(l);
                }
            }
        }
        let Some((vars, count, _)) = header else {
            return Err(Error::parse(last.max(1), ParseErrorKind::MissingHeader));
        };
        if !cur.is_empty() {
            clauses.push(cur);
        }
        if clauses.len() != count {
            return Err(Error::parse(
                last.max(1),
                ParseErrorKind::EdgeCountMismatch {
                    declared: count,
                    found: clauses.len(),
                },
            ));
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                s.push_str(&format!("{l} "));
            }
            s.push_str("0\n");
        }
        s
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            })
    }

    /// First satisfying assignment in binary counting order.
    pub fn brute_force_model(&self) -> Result<Option<Vec<bool>>> {
        if self.vars > SAT_BRUTE_FORCE_MAX_VARS {
            return Err(Error::GuardExceeded {
                what: "variables",
                size: self.vars,
                limit: SAT_BRUTE_FORCE_MAX_VARS,
            });
        }
        for mask in 0u64..(1u64 << self.vars) {
            let a: Vec<bool> = (0..self.vars).map(|i| mask >> i & 1 == 1).collect();
            if self.is_satisfied_by(&a) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

/// Edge ids of one variable's ring.
#[derive(Debug, Clone, Default)]
pub struct VariableGadget {
    pub entries: Vec<EdgeId>,
    /// `s_j -> y_j` and `y_j -> z_j`.
    pub clockwise: Vec<EdgeId>,
    /// `s_j -> z_{j-1}` and `z_j -> y_j`.
    pub counter_clockwise: Vec<EdgeId>,
    /// Exits of the `y_j`, live when the variable is true.
    pub plus_exits: Vec<EdgeId>,
    /// Exits of the `z_j`, live when the variable is false.
    pub minus_exits: Vec<EdgeId>,
}

#[derive(Debug, Clone)]
pub struct SatInstance {
    pub graph: DiGraph,
    pub formula: CnfFormula,
    pub gadgets: Vec<VariableGadget>,
    /// `clause -> root` edges.
    pub clause_edges: Vec<EdgeId>,
    /// `N - 1 + d`: an SCSS this small exists iff the formula is satisfiable.
    pub target: usize,
    pub certificate: Certificate,
}

pub const SAT_ROOT: usize = 0;

/// Builds the instance; a witness is attached when brute force is cheap.
pub fn reduce_sat_to_scss5(f: &CnfFormula) -> Result<SatInstance> {
    let f = CnfFormula::new(f.vars, f.clauses.clone())?;
    let mut pos = vec![Vec::new(); f.vars];
    let mut neg = vec![Vec::new(); f.vars];
    for (ci, c) in f.clauses.iter().enumerate() {
        let mut lits = c.clone();
        lits.sort_unstable();
        lits.dedup();
        for l in lits {
            let v = l.unsigned_abs() as usize - 1;
            if l > 0 {
                pos[v].push(1 + ci);
            } else {
                neg[v].push(1 + ci);
            }
        }
    }
    let mut next = 1 + f.clauses.len();
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    let mut add = |pairs: &mut Vec<(usize, usize)>, a: usize, b: usize, tag: Option<String>| {
        pairs.push((a, b));
        let e = EdgeId(pairs.len() - 1);
        if let Some(t) = tag {
            labels.push((e, t));
        }
        e
    };
    let mut gadgets = Vec::with_capacity(f.vars);
    for v in 0..f.vars {
        let q = pos[v].len().max(neg[v].len()).max(1);
        let s = |j: usize| next + 3 * j;
        let y = |j: usize| next + 3 * j + 1;
        let z = |j: usize| next + 3 * j + 2;
        let mut gd = VariableGadget::default();
        let var = v + 1;
        for j in 0..q {
            gd.entries.push(add(&mut pairs, SAT_ROOT, s(j), None));
            gd.clockwise
                .push(add(&mut pairs, s(j), y(j), Some(format!("x{var} cw"))));
            gd.counter_clockwise.push(add(
                &mut pairs,
                s(j),
                z((j + q - 1) % q),
                Some(format!("x{var} ccw")),
            ));
            gd.clockwise
                .push(add(&mut pairs, y(j), z(j), Some(format!("x{var} cw"))));
            gd.counter_clockwise
                .push(add(&mut pairs, z(j), y(j), Some(format!("x{var} ccw"))));
            let to = pos[v].get(j).copied().unwrap_or(SAT_ROOT);
            gd.plus_exits
                .push(add(&mut pairs, y(j), to, Some(format!("x{var}+"))));
            let to = neg[v].get(j).copied().unwrap_or(SAT_ROOT);
            gd.minus_exits
                .push(add(&mut pairs, z(j), to, Some(format!("x{var}-"))));
        }
        next += 3 * q;
        gadgets.push(gd);
    }
    let clause_edges = (0..f.clauses.len())
        .map(|ci| add(&mut pairs, 1 + ci, SAT_ROOT, None))
        .collect();
    let graph = DiGraph::from_edges(next, pairs)?;
    let d: usize = gadgets.iter().map(|g| g.entries.len()).sum();
    let target = graph.n() - 1 + d;
    let model = if f.vars <= SAT_BRUTE_FORCE_MAX_VARS {
        f.brute_force_model()?
    } else {
        None
    };
    let certificate = Certificate {
        predicted_opt: model.as_ref().map(|_| target),
        witness: model.map(Witness::Assignment).unwrap_or_default(),
        labels,
        ..Default::default()
    };
    Ok(SatInstance {
        graph,
        formula: f,
        gadgets,
        clause_edges,
        target,
        certificate,
    })
}

impl SatInstance {
    /// Number of ring entries, i.e. the out-degree of the root.
    pub fn d(&self) -> usize {
        self.graph.out_degree(SAT_ROOT)
    }

    /// The `N - 1 + d` edge SCSS of a satisfying assignment.
    pub fn assignment_to_scss(&self, assignment: &[bool]) -> Result<Vec<EdgeId>> {
        if !self.formula.is_satisfied_by(assignment) {
            return Err(Error::InvalidCertificate(
                "assignment does not satisfy the formula".into(),
            ));
        }
        let mut kept = self.clause_edges.clone();
        for (gd, &val) in self.gadgets.iter().zip(assignment) {
            kept.extend(&gd.entries);
            if val {
                kept.extend(&gd.counter_clockwise);
                kept.extend(&gd.plus_exits);
            } else {
                kept.extend(&gd.clockwise);
                kept.extend(&gd.minus_exits);
            }
        }
        kept.sort_unstable();
        debug_assert_eq!(kept.len(), self.target);
        Ok(kept)
    }

    /// Reads an assignment off an SCSS of size `N - 1 + d`. A variable is
    /// true iff its first counter-clockwise entry edge is kept.
    pub fn scss_to_assignment(&self, kept: &[EdgeId]) -> Result<Vec<bool>> {
        let mask = self.graph.edge_mask(kept)?;
        if !is_strongly_connected_subset(&self.graph, kept)? {
            return Err(Error::NotStronglyConnected);
        }
        let size = mask.iter().filter(|&&b| b).count();
        if size != self.target {
            return Err(Error::InvalidCertificate(format!(
                "SCSS has {size} edges, need exactly {}",
                self.target
            )));
        }
        let a: Vec<bool> = self
            .gadgets
            .iter()
            .map(|gd| mask[gd.counter_clockwise[0].0])
            .collect();
        if !self.formula.is_satisfied_by(&a) {
            return Err(Error::InvalidCertificate(
                "decoded assignment is not a model".into(),
            ));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let text = "c demo\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n";
        let f = CnfFormula::parse_dimacs(text).unwrap();
        assert_eq!(f.clauses, vec![vec![1, -2], vec![2, 3, -1]]);
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn dimacs_errors() {
        assert!(CnfFormula::parse_dimacs("1 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 1 1\n1 x 0\n").is_err());
    }

    #[test]
    fn single_positive_clause() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let inst = reduce_sat_to_scss5(&f).unwrap();
        // root, clause, s, y, z
        assert_eq!(inst.graph.n(), 5);
        assert_eq!(inst.d(), 1);
        assert_eq!(inst.target, 5);
        let h = inst.assignment_to_scss(&[true]).unwrap();
        assert!(is_strongly_connected_subset(&inst.graph, &h).unwrap());
        assert_eq!(inst.scss_to_assignment(&h).unwrap(), vec![true]);
        assert!(inst.assignment_to_scss(&[false]).is_err());
    }

    #[test]
    fn unsatisfiable_has_no_witness() {
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        let inst = reduce_sat_to_scss5(&f).unwrap();
        assert_eq!(inst.certificate.predicted_opt, None);
        assert_eq!(inst.certificate.witness, Witness::None);
    }
}
