//! Sidecar certificates written next to generated graphs.
//!
//! ```text
//! predicted_opt <k>
//! hamilton <e> <e> ...
//! stable <e> <e> ...
//! cycle <e> <e> ...            (one line per scripted cycle, in order)
//! witness assignment <0|1> ... | witness cover <v> ... | witness none
//! label <e> <tag>
//! ```

use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Witness {
    #[default]
    None,
    Assignment(Vec<bool>),
    Cover(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    pub predicted_opt: Option<usize>,
    pub hamilton: Option<Vec<EdgeId>>,
    pub stable: Option<Vec<EdgeId>>,
    pub cycles: Vec<Vec<EdgeId>>,
    pub witness: Witness,
    pub labels: Vec<(EdgeId, String)>,
}

fn ids(list: &[EdgeId]) -> String {
    list.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Certificate {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(k) = self.predicted_opt {
            writeln!(out, "predicted_opt {k}").unwrap();
        }
        if let Some(h) = &self.hamilton {
            writeln!(out, "hamilton {}", ids(h)).unwrap();
        }
        if let Some(s) = &self.stable {
            writeln!(out, "stable {}", ids(s)).unwrap();
        }
        for c in &self.cycles {
            writeln!(out, "cycle {}", ids(c)).unwrap();
        }
        match &self.witness {
            Witness::None => writeln!(out, "witness none").unwrap(),
            Witness::Assignment(a) => {
                let bits: Vec<&str> = a.iter().map(|&b| if b { "1" } else { "0" }).collect();
                writeln!(out, "witness assignment {}", bits.join(" ")).unwrap();
            }
            Witness::Cover(c) => {
                let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                writeln!(out, "witness cover {}", vs.join(" ")).unwrap();
            }
        }
        for (e, tag) in &self.labels {
            writeln!(out, "label {e} {tag}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut cert = Certificate::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let mut toks = raw.split_whitespace();
            let key = toks.next().unwrap_or_default();
            let rest: Vec<&str> = toks.collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line, ParseErrorKind::NonInteger(t.to_string())))
            };
            let edges = |r: &[&str]| {
                r.iter()
                    .map(|t| num(t).map(EdgeId))
                    .collect::<Result<Vec<_>>>()
            };
            match key {
                "predicted_opt" => {
                    let [k] = rest[..] else {
                        return Err(Error::parse(
                            line,
                            ParseErrorKind::WrongTokenCount {
                                expected: 2,
                                found: rest.len() + 1,
                            },
                        ));
                    };
                    cert.predicted_opt = Some(num(k)?);
                }
                "hamilton" => cert.hamilton = Some(edges(&rest)?),
                "stable" => cert.stable = Some(edges(&rest)?),
                "cycle" => cert.cycles.push(edges(&rest)?),
                "witness" => {
                    cert.witness = match rest.first().copied() {
                        Some("none") | None => Witness::None,
                        Some("assignment") => Witness::Assignment(
                            rest[1..]
                                .iter()
                                .map(|t| num(t).map(|b| b != 0))
                                .collect::<Result<_>>()?,
                        ),
                        Some("cover") => {
                            Witness::Cover(rest[1..].iter().map(|t| num(t)).collect::<Result<_>>()?)
                        }
                        Some(other) => {
                            return Err(Error::parse(
                                line,
                                ParseErrorKind::Other(format!("unknown witness kind {other:?}")),
                            ))
                        }
                    }
                }
                "label" => {
                    if rest.len() < 2 {
                        return Err(Error::parse(
                            line,
                            ParseErrorKind::WrongTokenCount {
                                expected: 3,
                                found: rest.len() + 1,
                            },
                        ));
                    }
                    cert.labels
                        .push((EdgeId(num(rest[0])?), rest[1..].join(" ")));
                }
                other => {
                    return Err(Error::parse(
                        line,
                        ParseErrorKind::Other(format!("unknown certificate key {other:?}")),
                    ))
                }
            }
        }
        Ok(cert)
    }
}
