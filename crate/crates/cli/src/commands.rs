//! Subcommand implementations shared by the `scss` and `meg` binaries.

use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use scss_core::approx::{contract_cycles_k_with, k_exchange, Algorithm, Scripted, SolveReport};
use scss_core::graph::{is_strongly_connected, is_strongly_connected_subset, write_graph};
use scss_core::instances::{
    gen_random_strong, gen_threaded_cycles, gen_two_exchange_worst, reduce_sat_to_scss5,
    reduce_vc_to_scss17, Certificate, CnfFormula, FamilyInstance, UGraph,
};
use scss_core::meg::{reachability_loss, solve_meg_with};
use scss_core::oracle::{bound_report, exact_scss_report, OracleLimits};
use scss_core::{DiGraph, EdgeId, Error, Rational};

use crate::error::{CliError, CliResult};
use crate::files::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

/// One `solve` result as written by `--report csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveRow {
    pub instance: String,
    pub alg: String,
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub lower_bound: usize,
    pub ratio_bound: f64,
    pub millis: f64,
}

pub const SOLVE_COLUMNS: &str = "instance,alg,n,m,size,lower_bound,ratio_bound,millis";

pub fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

/// Best cheap integer lower bound on the optimum of a strongly connected
/// graph: the cycle bound when the longest-cycle search fits the guard,
/// otherwise `n`.
pub fn lower_bound(g: &DiGraph, limits: &OracleLimits) -> usize {
    if g.n() <= 1 {
        return 0;
    }
    if g.n() <= limits.longest_cycle_max_n {
        if let Ok(b) = bound_report(g, limits) {
            return b.ceiling;
        }
    }
    g.n()
}

pub fn ratio(size: usize, lb: usize) -> f64 {
    if lb == 0 {
        1.0
    } else {
        size as f64 / lb as f64
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// cc3, cc3-fast, cc-k, cc-k:<k>, 2ex, branching, minimal or exact.
    #[arg(long)]
    pub alg: String,
    /// Cycle length for cc-k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Starting solution for 2ex, in the solution file format.
    #[arg(long)]
    pub initial: Option<String>,
    /// Root vertex for branching.
    #[arg(long)]
    pub root: Option<usize>,
    /// Certificate whose `cycle` lines drive cc-k before it falls back to
    /// its own cycle search.
    #[arg(long)]
    pub adversarial: Option<String>,
    /// `csv` prints one result row instead of the solution.
    #[arg(long, value_enum, alias = "format", default_value_t)]
    pub report: Format,
    #[arg(short, long)]
    pub out: Option<String>,
    pub input: String,
}

/// Parses the `--alg` selector together with the flags that refine it.
pub fn resolve_algorithm(alg: &str, k: Option<usize>, root: Option<usize>) -> CliResult<Algorithm> {
    let alg = match (alg, k) {
        ("cc-k", Some(k)) => format!("cc-k:{k}"),
        ("cc-k", None) => return Err(CliError::Usage("cc-k needs --k".into())),
        (other, Some(_)) if !other.starts_with("cc-k") => {
            return Err(CliError::Usage(format!("--k does not apply to {other}")))
        }
        (other, _) => other.to_string(),
    };
    let parsed: Algorithm = alg
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    Ok(match (parsed, root) {
        (Algorithm::Branching { .. }, Some(r)) => Algorithm::Branching { root: r },
        (_, Some(_)) => return Err(CliError::Usage("--root only applies to branching".into())),
        (a, None) => a,
    })
}

pub fn solve(args: &SolveArgs) -> CliResult<()> {
    let limits = OracleLimits::from_env();
    let alg = resolve_algorithm(&args.alg, args.k, args.root)?;
    let g = read_graph(&args.input)?;
    if !is_strongly_connected(&g) {
        return Err(CliError::input(&args.input, Error::NotStronglyConnected));
    }
    if let Algorithm::Branching { root } = alg {
        if root >= g.n() {
            return Err(CliError::Usage(format!("root {root} is not a vertex")));
        }
    }
    if args.initial.is_some() && alg != Algorithm::TwoExchange {
        return Err(CliError::Usage("--initial only applies to 2ex".into()));
    }
    let report: SolveReport = match (alg, &args.initial, &args.adversarial) {
        (Algorithm::TwoExchange, Some(path), _) => {
            let init = read_solution(&g, path)?;
            if !is_strongly_connected_subset(&g, &init)? {
                return Err(CliError::Usage(format!("{path} is not strongly connected")));
            }
            k_exchange(&g, 2, Some(&init))?
        }
        (Algorithm::CcK(k), _, Some(path)) => {
            let cert =
                Certificate::parse(&read_text(path)?).map_err(|e| CliError::input(path, e))?;
            let mut script = Scripted::new(cert.cycles);
            contract_cycles_k_with(&g, k, &mut script)?.report
        }
        (_, _, Some(_)) => {
            return Err(CliError::Usage("--adversarial only applies to cc-k".into()))
        }
        (Algorithm::Exact, _, _) => exact_scss_report(&g, &limits)?,
        _ => alg.run_with(&g, &limits)?,
    };
    if !is_strongly_connected_subset(&g, &report.kept)? {
        return Err(CliError::Verify(format!(
            "{} output is not strongly connected",
            report.algorithm
        )));
    }
    let lb = lower_bound(&g, &limits);
    eprintln!(
        "{}: n={} m={} kept={} lb={} ratio<={:.4} ({:.3} ms)",
        report.algorithm,
        g.n(),
        g.m(),
        report.size,
        lb,
        ratio(report.size, lb),
        report.millis()
    );
    let header = solution_header(
        &report.algorithm,
        report.size,
        Some(Rational::from_integer(lb as i128)),
    );
    match args.report {
        Format::Csv => {
            if let Some(out) = &args.out {
                write_solution_file(&g, &report.kept, header, Some(out))?;
            }
            let row = SolveRow {
                instance: instance_id(&args.input),
                alg: report.algorithm.clone(),
                n: g.n(),
                m: g.m(),
                size: report.size,
                lower_bound: lb,
                ratio_bound: ratio(report.size, lb),
                millis: round3(report.millis()),
            };
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(std::io::stdout());
            w.serialize(row)?;
            w.flush().map_err(Error::Io)?;
        }
        Format::Text => write_solution_file(&g, &report.kept, header, args.out.as_deref())?,
    }
    Ok(())
}

/// Checks that a solution is a subset of the graph with the same
/// reachability.
pub fn verify(graph: &str, solution: &str) -> CliResult<()> {
    let g = read_graph(graph)?;
    let kept = read_solution(&g, solution)?;
    if let Some((u, v)) = reachability_loss(&g, &kept)? {
        println!(
            "reachability lost: {v} is reachable from {u} in the graph but not in the solution"
        );
        return Err(CliError::Verify(format!("{u} no longer reaches {v}")));
    }
    println!(
        "ok: {} of {} edges kept, reachability preserved",
        kept.len(),
        g.m()
    );
    Ok(())
}

pub fn bound(input: &str) -> CliResult<()> {
    let g = read_graph(input)?;
    let b = bound_report(&g, &OracleLimits::from_env())?;
    let mut out = String::new();
    writeln!(out, "n {}", b.n).unwrap();
    writeln!(out, "longest_cycle {}", b.max_cycle_len).unwrap();
    let r = b
        .cycle_lemma_bound
        .map(format_rational)
        .unwrap_or_else(|| "-".into());
    writeln!(out, "bound {r}").unwrap();
    writeln!(out, "ceiling {}", b.ceiling).unwrap();
    print!("{out}");
    Ok(())
}

pub fn exact(input: &str, out: Option<&str>) -> CliResult<()> {
    let g = read_graph(input)?;
    if !is_strongly_connected(&g) {
        return Err(CliError::input(input, Error::NotStronglyConnected));
    }
    let r = exact_scss_report(&g, &OracleLimits::from_env())?;
    eprintln!("optimum {}", r.size);
    let header = solution_header(
        "exact",
        r.size,
        Some(Rational::from_integer(r.size as i128)),
    );
    write_solution_file(&g, &r.kept, header, out)
}

fn graph_text(g: &DiGraph, comments: &[String]) -> Vec<u8> {
    let mut buf = Vec::new();
    for c in comments {
        buf.extend_from_slice(format!("# {c}\n").as_bytes());
    }
    write_graph(g, &mut buf).expect("writing to memory");
    buf
}

/// Writes a generated graph and, given an output path, its sidecars.
fn write_instance(
    g: &DiGraph,
    comments: &[String],
    cert: &Certificate,
    stable: Option<&[EdgeId]>,
    out: Option<&str>,
) -> CliResult<()> {
    emit(out, &graph_text(g, comments))?;
    match out {
        Some(path) => {
            emit(Some(&sidecar(path, "cert")), cert.to_text().as_bytes())?;
            if let Some(s) = stable {
                let header = solution_header(
                    "stable",
                    s.len(),
                    cert.predicted_opt
                        .map(|k| Rational::from_integer(k as i128)),
                );
                write_solution_file(g, s, header, Some(&sidecar(path, "stable")))?;
            }
        }
        None => eprintln!("note: sidecar files are only written with -o"),
    }
    Ok(())
}

fn write_family(f: &FamilyInstance, comment: String, out: Option<&str>) -> CliResult<()> {
    write_instance(
        &f.graph,
        &[comment],
        &f.certificate(),
        f.stable.as_deref(),
        out,
    )
}

pub fn gen_threaded(k: usize, groups: usize, out: Option<&str>) -> CliResult<()> {
    let f = gen_threaded_cycles(k, groups)?;
    write_family(&f, format!("threaded k={k} groups={groups}"), out)
}

pub fn gen_ex2worst(groups: usize, out: Option<&str>) -> CliResult<()> {
    let f = gen_two_exchange_worst(groups)?;
    write_family(&f, format!("ex2worst groups={groups}"), out)
}

pub fn gen_rand(n: usize, extra: usize, seed: u64, out: Option<&str>) -> CliResult<()> {
    let g = gen_random_strong(n, extra, seed)?;
    emit(
        out,
        &graph_text(&g, &[format!("rand n={n} extra={extra} seed={seed}")]),
    )
}

pub fn reduce_sat(path: &str, out: Option<&str>) -> CliResult<()> {
    let f = CnfFormula::parse_dimacs(&read_text(path)?).map_err(|e| CliError::input(path, e))?;
    let inst = reduce_sat_to_scss5(&f)?;
    let comments = [format!(
        "sat vars={} clauses={} target={}",
        f.vars,
        f.clauses.len(),
        inst.target
    )];
    write_instance(&inst.graph, &comments, &inst.certificate, None, out)
}

pub fn reduce_vc(path: &str, out: Option<&str>) -> CliResult<()> {
    let ug = UGraph::parse(&read_text(path)?).map_err(|e| CliError::input(path, e))?;
    let inst = reduce_vc_to_scss17(&ug, None)?;
    let comments = [format!(
        "vc n={} m={} colors={}",
        ug.n(),
        ug.m(),
        inst.colors_used()
    )];
    write_instance(&inst.graph, &comments, &inst.certificate, None, out)
}

#[derive(Debug, Args)]
pub struct MegSolveArgs {
    /// cc3, cc-k:<k>, 2ex, branching, minimal or exact.
    #[arg(long, default_value = "cc3")]
    pub alg: String,
    #[arg(short, long)]
    pub out: Option<String>,
    pub input: String,
}

pub fn meg_solve(args: &MegSolveArgs) -> CliResult<()> {
    let alg: Algorithm = args
        .alg
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let g = read_graph(&args.input)?;
    let limits = OracleLimits::from_env();
    let sol = solve_meg_with(&g, alg, &limits)?;
    if let Some((u, v)) = reachability_loss(&g, &sol.kept)? {
        return Err(CliError::Verify(format!("MEG output loses {u} ~> {v}")));
    }
    // Every kept acyclic edge is forced, and a component needs a bound's
    // worth of edges.
    let lb: usize = sol.acyclic.kept.len()
        + sol
            .components
            .iter()
            .map(|c| {
                let (sub, _) = g.induced_subgraph(&c.vertices);
                lower_bound(&sub, &limits)
            })
            .sum::<usize>();
    eprintln!(
        "meg {alg}: n={} m={} kept={} (acyclic {} kept, {} removed; {} strong components) lb={lb}",
        g.n(),
        g.m(),
        sol.size(),
        sol.acyclic.kept.len(),
        sol.acyclic.removed,
        sol.components.len()
    );
    let header = solution_header(
        &alg.to_string(),
        sol.size(),
        Some(Rational::from_integer(lb as i128)),
    );
    write_solution_file(&g, &sol.kept, header, args.out.as_deref())
}
