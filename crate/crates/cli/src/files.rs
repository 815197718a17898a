//! Reading graphs and solutions, writing solutions and sidecars.

use std::fs;
use std::io::Write;
use std::path::Path;

use scss_core::graph::{parse_edge_list, parse_graph, write_solution};
use scss_core::{DiGraph, EdgeId, Error, Rational};

use crate::error::{CliError, CliResult};

pub fn read_text(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(path, Error::Io(e)))
}

pub fn read_graph(path: &str) -> CliResult<DiGraph> {
    let g = parse_graph(&read_text(path)?).map_err(|e| CliError::input(path, e))?;
    let norm = g.normalization();
    if norm.self_loops + norm.duplicates > 0 {
        eprintln!(
            "warning: {path}: dropped {} self-loop(s) and {} duplicate edge(s)",
            norm.self_loops, norm.duplicates
        );
    }
    Ok(g)
}

/// Maps the edges of a solution file onto edge ids of `g`. An edge that `g`
/// does not have is a verification failure, not a parse error.
pub fn read_solution(g: &DiGraph, path: &str) -> CliResult<Vec<EdgeId>> {
    let list = parse_edge_list(&read_text(path)?).map_err(|e| CliError::input(path, e))?;
    if list.n != g.n() {
        return Err(CliError::Verify(format!(
            "{path} has {} vertices, the graph has {}",
            list.n,
            g.n()
        )));
    }
    let mut kept = Vec::with_capacity(list.edges.len());
    for (u, v) in list.edges {
        if u == v {
            continue;
        }
        let e = g.find_edge(u, v).ok_or_else(|| {
            CliError::Verify(format!("edge {u} {v} of {path} is not in the graph"))
        })?;
        kept.push(e);
    }
    kept.sort_unstable();
    kept.dedup();
    Ok(kept)
}

pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The `# alg=<name> kept=<k> lb=<bound>` line, without the `#`.
pub fn solution_header(alg: &str, kept: usize, lb: Option<Rational>) -> String {
    let lb = lb.map(format_rational).unwrap_or_else(|| "-".into());
    format!("alg={alg} kept={kept} lb={lb}")
}

pub fn write_solution_file(
    g: &DiGraph,
    kept: &[EdgeId],
    header: String,
    out: Option<&str>,
) -> CliResult<()> {
    let mut buf = Vec::new();
    write_solution(g, kept, &[header], &mut buf).map_err(Error::Io)?;
    emit(out, &buf)
}

/// Writes to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&str>, bytes: &[u8]) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::input(p, Error::Io(e))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(bytes).map_err(Error::Io)?;
            so.flush().map_err(Error::Io)?;
            Ok(())
        }
    }
}

/// `<out>.<ext>`, keeping whatever extension `out` already has.
pub fn sidecar(out: &str, ext: &str) -> String {
    format!("{out}.{ext}")
}

/// File stem used as the instance id in reports.
pub fn instance_id(path: &str) -> String {
    Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string())
}
