use std::process::ExitCode;

use clap::{Parser, Subcommand};

use scss_cli::bench::{parse_suite, run_bench};
use scss_cli::commands::{self, SolveArgs};
use scss_cli::error::{finish, CliError};
use scss_cli::files::read_text;

/// Strongly connected spanning subgraphs: generate, solve, verify, bound.
#[derive(Parser)]
#[command(name = "scss", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated instance; with -o, also `<out>.cert` (and `<out>.stable`).
    #[command(subcommand)]
    Gen(Gen),
    Solve(SolveArgs),
    /// Exit 0 iff the solution is a subset of the graph with the same reachability.
    Verify {
        graph: String,
        solution: String,
    },
    /// Longest cycle and the lower bound it implies.
    Bound {
        input: String,
    },
    /// Exact optimum; refuses graphs above SCSS_ORACLE_MAX_N vertices.
    Exact {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Compile a hardness reduction into an SCSS instance.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Run a TOML benchmark suite, CSV on stdout.
    Bench {
        suite: String,
        /// Accepted for compatibility; cells always run one at a time.
        #[arg(long)]
        sequential_timing: bool,
    },
}

#[derive(Subcommand)]
enum Gen {
    Threaded {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        groups: usize,
        #[arg(short, long)]
        out: Option<String>,
    },
    Ex2worst {
        #[arg(long)]
        groups: usize,
        #[arg(short, long)]
        out: Option<String>,
    },
    Rand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum Reduce {
    /// DIMACS CNF input.
    Sat {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Undirected edge list tagged `# undirected`, maximum degree 7.
    Vc {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Gen(Gen::Threaded { k, groups, out }) => {
            commands::gen_threaded(k, groups, out.as_deref())
        }
        Cmd::Gen(Gen::Ex2worst { groups, out }) => commands::gen_ex2worst(groups, out.as_deref()),
        Cmd::Gen(Gen::Rand {
            n,
            extra,
            seed,
            out,
        }) => commands::gen_rand(n, extra, seed, out.as_deref()),
        Cmd::Solve(args) => commands::solve(&args),
        Cmd::Verify { graph, solution } => commands::verify(&graph, &solution),
        Cmd::Bound { input } => commands::bound(&input),
        Cmd::Exact { input, out } => commands::exact(&input, out.as_deref()),
        Cmd::Reduce(Reduce::Sat { input, out }) => commands::reduce_sat(&input, out.as_deref()),
        Cmd::Reduce(Reduce::Vc { input, out }) => commands::reduce_vc(&input, out.as_deref()),
        Cmd::Bench { suite, .. } => {
            let suite = parse_suite(&read_text(&suite)?)?;
            if let Some(s) = run_bench(&suite, std::io::stdout().lock())? {
                eprintln!("{}", s.line());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors by itself.
    finish(run(Cli::parse()))
}
