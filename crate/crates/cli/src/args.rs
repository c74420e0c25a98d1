use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Graph invariants: independence, annihilation and critical independence.
#[derive(Debug, Parser)]
#[command(name = "annihilator", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Bipartite,
    ConnectedClawFree,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Input graph format; there is no auto-detection.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Worker threads for verify and search.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Base seed for random sources; graph i uses seed + i.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Vertex cap for the exact independence solver.
    #[arg(long, global = true, env = "ANNIHILATOR_SOLVER_LIMIT")]
    pub limit_n: Option<usize>,
    /// Include certifying sets in reports.
    #[arg(long, global = true)]
    pub witnesses: bool,
    /// Take the critical values from the exhaustive oracle.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    /// Print only the verdict line.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every invariant of the input graphs.
    Compute {
        /// Input file; stdin when absent or "-".
        input: Option<PathBuf>,
    },
    /// Build a family member, optionally checking its predicted values.
    Family {
        name: String,
        /// Parameters as key=value, or bare values in declaration order.
        params: Vec<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Check the given statements over a graph source.
    Verify {
        #[arg(required = true)]
        theorems: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run every statement (or those given with --theorem) over a source.
    Search {
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Only examine graphs of this class.
    #[arg(long, value_enum, default_value_t = ClassArg::All)]
    pub class: ClassArg,
    /// Stop after the first graph with a violation.
    #[arg(long)]
    pub early_exit: bool,
    /// Violating graphs listed per statement.
    #[arg(long, default_value_t = 20)]
    pub max_violations: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// All labeled graphs on 1..=N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    /// graph6 stream, one graph per line; "-" for stdin.
    #[arg(long, value_name = "PATH")]
    pub graph6: Option<PathBuf>,
    /// Random graphs as "n,p,count".
    #[arg(long, value_name = "N,P,COUNT")]
    pub random: Option<String>,
    /// A family name followed by parameter ranges such as "2..6" or "k=2..6".
    #[arg(long, num_args = 1.., value_name = "NAME [RANGE]...")]
    pub family: Option<Vec<String>>,
}
