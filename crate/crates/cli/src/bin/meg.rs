use std::process::ExitCode;

use clap::{Parser, Subcommand};

use scss_cli::commands::{self, MegSolveArgs};
use scss_cli::error::finish;

/// Minimum equivalent graph: exact on the acyclic part, approximate inside
/// strong components.
#[derive(Parser)]
#[command(name = "meg", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    Solve(MegSolveArgs),
    /// Exit 0 iff the solution is a subset of the graph with the same reachability.
    Verify {
        graph: String,
        solution: String,
    },
}

fn main() -> ExitCode {
    let r = match Cli::parse().cmd {
        Cmd::Solve(args) => commands::meg_solve(&args),
        Cmd::Verify { graph, solution } => commands::verify(&graph, &solution),
    };
    finish(r)
}
