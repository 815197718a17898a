//! Benchmark suites: TOML in, CSV rows out.
//!
//! ```toml
//! algorithms = ["cc3-fast", "branching"]
//! repeats = 3
//!
//! [[instance]]
//! id = "r1"
//! generator = "rand"        # rand | threaded | ex2worst | file
//! n = 1000
//! extra = 3000
//! seed = 7
//!
//! [scaling]                 # optional geometric ladder of rand instances
//! ladder = [10000, 100000, 1000000]
//! density = 4               # m / n
//! seed = 1
//! algorithm = "cc3-fast"
//! ```

use std::io::Write;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use scss_core::approx::Algorithm;
use scss_core::graph::is_strongly_connected_subset;
use scss_core::instances::{gen_random_strong, gen_threaded_cycles, gen_two_exchange_worst};
use scss_core::oracle::OracleLimits;
use scss_core::{DiGraph, Error};

use crate::commands::{lower_bound, ratio, round3};
use crate::error::{CliError, CliResult};
use crate::files::read_graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub alg: String,
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub lower_bound: usize,
    pub ratio_bound: f64,
    pub millis: f64,
    pub seed: Option<u64>,
}

pub const BENCH_COLUMNS: &str = "instance,alg,n,m,size,lower_bound,ratio_bound,millis,seed";

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    #[serde(default)]
    pub algorithms: Vec<String>,
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    #[serde(default, rename = "instance")]
    pub instances: Vec<InstanceSpec>,
    pub scaling: Option<Scaling>,
}

fn default_repeats() -> usize {
    3
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub id: String,
    pub generator: String,
    pub n: Option<usize>,
    pub extra: Option<usize>,
    pub seed: Option<u64>,
    pub k: Option<usize>,
    pub groups: Option<usize>,
    pub path: Option<String>,
    /// Overrides the suite-wide list.
    pub algorithms: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scaling {
    pub ladder: Vec<usize>,
    #[serde(default = "default_density")]
    pub density: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_scaling_alg")]
    pub algorithm: String,
}

fn default_density() -> usize {
    4
}

fn default_scaling_alg() -> String {
    "cc3-fast".into()
}

/// Per-edge time of every ladder step and the max/min spread.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingSummary {
    pub algorithm: String,
    pub steps: Vec<(usize, f64)>,
    pub spread: f64,
}

impl ScalingSummary {
    pub fn line(&self) -> String {
        let steps: Vec<String> = self
            .steps
            .iter()
            .map(|(m, ns)| format!("m={m} {ns:.1} ns/edge"))
            .collect();
        format!(
            "scaling {}: {}; spread {:.2}x",
            self.algorithm,
            steps.join(", "),
            self.spread
        )
    }
}

fn need<T: Copy>(v: Option<T>, what: &str, id: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("instance {id}: {what} is required")))
}

fn build(spec: &InstanceSpec) -> CliResult<DiGraph> {
    let id = &spec.id;
    Ok(match spec.generator.as_str() {
        "rand" => gen_random_strong(
            need(spec.n, "n", id)?,
            need(spec.extra, "extra", id)?,
            spec.seed.unwrap_or(0),
        )?,
        "threaded" => {
            gen_threaded_cycles(need(spec.k, "k", id)?, need(spec.groups, "groups", id)?)?.graph
        }
        "ex2worst" => gen_two_exchange_worst(need(spec.groups, "groups", id)?)?.graph,
        "file" => read_graph(
            spec.path
                .as_deref()
                .ok_or_else(|| CliError::Usage(format!("instance {id}: path is required")))?,
        )?,
        other => {
            return Err(CliError::Usage(format!(
                "instance {id}: unknown generator {other:?}"
            )))
        }
    })
}

fn parse_alg(s: &str) -> CliResult<Algorithm> {
    s.parse().map_err(|e: Error| CliError::Usage(e.to_string()))
}

/// Runs one cell `repeats` times and keeps the median wall time.
fn cell(
    id: &str,
    g: &DiGraph,
    alg_name: &str,
    repeats: usize,
    seed: Option<u64>,
    limits: &OracleLimits,
) -> CliResult<BenchRow> {
    let alg = parse_alg(alg_name)?;
    let mut times = Vec::with_capacity(repeats.max(1));
    let mut last = None;
    for _ in 0..repeats.max(1) {
        let t = Instant::now();
        let r = alg.run_with(g, limits)?;
        times.push(t.elapsed());
        last = Some(r);
    }
    let r = last.expect("at least one run");
    if !is_strongly_connected_subset(g, &r.kept)? {
        return Err(CliError::Verify(format!(
            "{alg} on {id} is not strongly connected"
        )));
    }
    times.sort();
    let median: Duration = times[times.len() / 2];
    let lb = lower_bound(g, limits);
    Ok(BenchRow {
        instance: id.to_string(),
        alg: alg.to_string(),
        n: g.n(),
        m: g.m(),
        size: r.size,
        lower_bound: lb,
        ratio_bound: ratio(r.size, lb),
        millis: round3(median.as_secs_f64() * 1000.0),
        seed,
    })
}

/// Runs the suite cell by cell, in order, writing rows as they finish.
pub fn run_bench<W: Write>(suite: &Suite, out: W) -> CliResult<Option<ScalingSummary>> {
    let limits = OracleLimits::from_env();
    // Header written by hand so that it goes out even when no row follows.
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(BENCH_COLUMNS.split(','))?;
    let flush = |w: &mut csv::Writer<W>, row: &BenchRow| -> CliResult<()> {
        w.serialize(row)?;
        w.flush().map_err(Error::Io)?;
        Ok(())
    };
    for spec in &suite.instances {
        let g = build(spec)?;
        let algs = spec.algorithms.as_ref().unwrap_or(&suite.algorithms);
        let seed = (spec.generator == "rand").then(|| spec.seed.unwrap_or(0));
        for a in algs {
            let row = cell(&spec.id, &g, a, suite.repeats, seed, &limits)?;
            flush(&mut w, &row)?;
        }
    }
    let mut summary = None;
    if let Some(sc) = &suite.scaling {
        let alg = parse_alg(&sc.algorithm)?;
        let mut steps = Vec::new();
        for &m in &sc.ladder {
            let n = (m / sc.density.max(1)).max(2);
            let g = gen_random_strong(n, m.saturating_sub(n), sc.seed)?;
            // Untimed pass so the first rung does not pay for cold pages.
            alg.run_with(&g, &limits)?;
            let row = cell(
                &format!("scale-m{m}"),
                &g,
                &sc.algorithm,
                suite.repeats,
                Some(sc.seed),
                &limits,
            )?;
            steps.push((g.m(), row.millis * 1e6 / g.m() as f64));
            flush(&mut w, &row)?;
        }
        let per: Vec<f64> = steps.iter().map(|s| s.1).collect();
        let lo = per.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = per.iter().cloned().fold(0.0, f64::max);
        summary = Some(ScalingSummary {
            algorithm: alg.to_string(),
            steps,
            spread: if lo > 0.0 { hi / lo } else { f64::INFINITY },
        });
    }
    w.flush().map_err(Error::Io)?;
    Ok(summary)
}

pub fn parse_suite(text: &str) -> CliResult<Suite> {
    Ok(toml::from_str(text)?)
}
