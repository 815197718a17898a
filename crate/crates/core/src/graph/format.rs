//! Edge-list text format.
//!
//! ```text
//! # comments start with '#'
//! <n> <m>
//! <tail> <head>      (exactly m lines, 0-based)
//! ```

use std::io::{self, Write};
use std::path::Path;

use super::{DiGraph, EdgeId};
use crate::error::{Error, ParseErrorKind, Result};

/// Raw contents of an edge-list file, before any normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Comment lines with the leading `#` and surrounding whitespace removed.
    pub comments: Vec<String>,
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, ParseErrorKind::NonInteger(tok.to_string())))
}

fn pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 2 {
        // A lone garbage token reads better as a non-integer error.
        if let Some(bad) = toks.iter().find(|t| t.parse::<usize>().is_err()) {
            return Err(Error::parse(
                line,
                ParseErrorKind::NonInteger(bad.to_string()),
            ));
        }
        return Err(Error::parse(
            line,
            ParseErrorKind::WrongTokenCount {
                expected: 2,
                found: toks.len(),
            },
        ));
    }
    Ok((parse_usize(toks[0], line)?, parse_usize(toks[1], line)?))
}

/// Parses the edge-list format without normalizing. Vertex bounds are checked.
pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut comments = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if let Some(c) = trimmed.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        match header {
            None => {
                let (n, m) = pair(trimmed, line).map_err(|e| match e {
                    Error::Parse {
                        kind: ParseErrorKind::WrongTokenCount { .. },
                        line,
                    } => Error::parse(line, ParseErrorKind::MalformedHeader),
                    other => other,
                })?;
                header = Some((n, m));
                edges.reserve(m.min(1 << 24));
            }
            Some((n, m)) => {
                let (u, v) = pair(trimmed, line)?;
                if edges.len() == m {
                    return Err(Error::parse(
                        line,
                        ParseErrorKind::EdgeCountMismatch {
                            declared: m,
                            found: m + 1,
                        },
                    ));
                }
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::parse(
                            line,
                            ParseErrorKind::VertexOutOfRange { vertex: x, n },
                        ));
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(
            last_line.max(1),
            ParseErrorKind::MissingHeader,
        ));
    };
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            ParseErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    Ok(EdgeList { n, edges, comments })
}

/// Parses and normalizes a directed graph. Dropped self-loops and duplicate
/// edges are counted in [`DiGraph::normalization`].
pub fn parse_graph(text: &str) -> Result<DiGraph> {
    let list = parse_edge_list(text)?;
    DiGraph::from_edges(list.n, list.edges)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<DiGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

pub fn write_graph<W: Write>(g: &DiGraph, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for &(u, v) in g.edge_pairs() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// Writes the kept edges of `g` in the graph format, preceded by one comment
/// line per entry of `header`.
pub fn write_solution<W: Write>(
    g: &DiGraph,
    kept: &[EdgeId],
    header: &[String],
    mut w: W,
) -> io::Result<()> {
    for line in header {
        writeln!(w, "# {line}")?;
    }
    writeln!(w, "{} {}", g.n(), kept.len())?;
    for &e in kept {
        let (u, v) = g.edge(e);
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
