use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphburn::exact::DEFAULT_NODE_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "burn", version, about = "Graph burning toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct BudgetArg {
    /// Search node budget.
    #[arg(long, env = "BURN_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph in edge-list format.
    #[arg(
        long,
        conflicts_with = "artifact",
        required_unless_present = "artifact"
    )]
    pub graph: Option<PathBuf>,
    /// Reduction artifact written by `reduce-ig` or `reduce-pg`.
    #[arg(long)]
    pub artifact: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph or an instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check that a schedule burns a graph.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        schedule: PathBuf,
    },
    /// Exact burning number with a witness schedule.
    Exact {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Burn a grid with the subgrid approximation.
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Subgrid height; defaults to ceil(rows^(2/3)).
        #[arg(long, requires = "sub_cols")]
        sub_rows: Option<usize>,
        /// Subgrid width; defaults to ceil(cols^(2/3)).
        #[arg(long, requires = "sub_rows")]
        sub_cols: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Solve a distinct 3-partition instance.
    #[command(name = "3part")]
    ThreePart {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Build the interval graph gadget for an instance.
    ReduceIg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        #[arg(long)]
        emit_intervals: Option<PathBuf>,
        /// Write the optimal schedule obtained from a solution.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Write the JSON artifact describing the gadget.
        #[arg(long)]
        artifact: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Recover a partition from an optimal schedule of the interval gadget.
    ExtractIg {
        #[arg(long)]
        artifact: PathBuf,
        #[arg(long)]
        schedule: PathBuf,
    },
    /// Build the permutation-graph path forest for an instance.
    ReducePg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        #[arg(long)]
        emit_perm: Option<PathBuf>,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        artifact: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Recover a partition from an optimal schedule of the path forest.
    ExtractPg {
        #[arg(long)]
        artifact: PathBuf,
        #[arg(long)]
        schedule: PathBuf,
    },
    /// Greedy schedule (radical centres, then farthest unburnt vertex).
    Greedy {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Rebuild a worked example end to end.
    Demo {
        #[arg(value_enum)]
        which: DemoKind,
    },
    /// Randomized agreement check between simulation and cluster cover.
    Sweep {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 50)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; results are reported in trial order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    /// Interval gadget for {10, 11, 12, 14, 15, 16}.
    Interval,
    /// Path forest for {10, 11, 12, 14, 15, 16}.
    Permutation,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Disjoint paths with the given orders.
    Forest {
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Path forest realized as a permutation graph.
    Pg {
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emit_perm: Option<PathBuf>,
    },
    /// Interval gadget graph for an instance.
    Ig {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// G(n, p) random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random solvable distinct 3-partition instance.
    Instance {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 30)]
        max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
