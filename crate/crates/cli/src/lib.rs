//! Command-line front end.
//!
//! Exit codes: 0 success (all checks passed), 1 verification failures,
//! 2 input errors, 3 exhausted search budgets.

mod cache;
mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use commands::{bounds, compute, families, verify};

pub const SOLVER_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "edgemu", version, about = "Exact mu-parameters of proper edge colorings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the per-t table and the four aggregates for one graph.
    Compute(ComputeArgs),
    /// Check the known relations on a corpus of graphs.
    Verify(VerifyArgs),
    /// Evaluate the rainbow-coloring bound for r-regular graphs.
    Bounds(BoundsArgs),
    /// List the graph family generators.
    Families(FamiliesArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Worker threads for each search.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Node budget per (graph, t) search.
    #[arg(long, default_value_t = 100_000_000)]
    pub node_budget: u64,
    /// Depth at which each search tree is partitioned.
    #[arg(long, default_value_t = 3)]
    pub split_depth: usize,
    /// Refuse full tables for graphs with more edges than this.
    #[arg(long, default_value_t = 16)]
    pub max_edges: usize,
}

impl SearchArgs {
    pub fn solver_config(&self) -> edgemu::solver::SolverConfig {
        let mut config = edgemu::solver::SolverConfig::default()
            .with_workers(self.workers as usize)
            .with_node_budget(self.node_budget);
        config.search.split_depth = self.split_depth;
        config
    }
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct GraphSource {
    /// Graph as a graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Graph as an edge-list file.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Family member, e.g. `cycle:7` or `complete_bipartite:3,3`.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Compute a single row.
    #[arg(long, conflicts_with = "t_range")]
    pub t: Option<u32>,
    /// Compute rows `A..B` (inclusive).
    #[arg(long, value_name = "A..B")]
    pub t_range: Option<String>,
    /// Omit the per-t table from the output.
    #[arg(long)]
    pub summary_only: bool,
    /// JSON-lines result cache.
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Accepted for symmetry with `verify`; output is always JSON.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Family member or range, e.g. `cycle:3..8`; repeatable.
    #[arg(long, value_name = "SPEC")]
    pub family: Vec<String>,
    /// graph6 string; repeatable.
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Edge-list file; repeatable.
    #[arg(long, value_name = "FILE")]
    pub edges: Vec<PathBuf>,
    /// Add a deliberately corrupted summary whose check must fail.
    #[arg(long)]
    pub inject_corrupt: bool,
    /// Print the JSON report on stdout and the table on stderr.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    /// Regular degree.
    #[arg(long, requires = "n", conflicts_with_all = ["graph6", "edges", "family"])]
    pub r: Option<i64>,
    /// Vertex count.
    #[arg(long, requires = "r")]
    pub n: Option<i64>,
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FamiliesArgs {
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

/// What a command produced: text for stdout and stderr plus an exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Verify(args) => verify(&args),
        Command::Bounds(args) => bounds(&args),
        Command::Families(args) => Ok(families(&args)),
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}

pub fn main_exit(cli: Cli) -> ExitCode {
    let out = run(cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}
