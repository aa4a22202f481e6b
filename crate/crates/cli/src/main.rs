//! `rlid`: command-line access to the rlid-core solvers, constructions and
//! experiment sweeps.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rlid", version, about = "Relaxed locally identifying colorings of graphs")]
pub struct Cli {
    /// Search-node budget for exact solvers (overrides RLID_NODE_BUDGET).
    #[arg(long, global = true, value_name = "NODES")]
    pub budget: Option<u64>,
    /// Wall-clock budget per search, in milliseconds.
    #[arg(long, global = true, value_name = "MS")]
    pub time_budget: Option<u64>,
    /// Write the main output to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file (`.col`/`.dimacs` is DIMACS, anything else an edge list).
    pub graph: PathBuf,
    /// Override the format guessed from the extension.
    #[arg(long, value_name = "FORMAT")]
    pub input_format: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Plain,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphOut {
    Edgelist,
    Dimacs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact value of a coloring parameter.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        /// rlid, lid, id, chromatic or gamma-id.
        #[arg(long, default_value = "rlid")]
        param: String,
        /// Include the bounds report.
        #[arg(long)]
        bounds: bool,
        /// Include wall time in the statistics.
        #[arg(long)]
        timing: bool,
        /// Disable search shortcuts.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether a coloring with at most K colors exists.
    Decide {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        k: u32,
        #[arg(long, default_value = "rlid")]
        param: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check a coloring file (or, for id-code, a vertex list) against a mode.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Two-column `vertex color` file, or whitespace-separated vertices.
        witness: PathBuf,
        /// rlid, lid, id, proper or id-code.
        #[arg(long, default_value = "rlid")]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Every applicable lower and upper bound.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        /// Clique side of a split partition, comma-separated.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Twin classes and the twin-free quotient.
    Quotient {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Graph format for plain output.
        #[arg(long, value_enum, default_value_t = GraphOut::Edgelist)]
        to: GraphOut,
    },
    /// Build a named family member.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Constructive 3-coloring of a connected bipartite graph.
    ColorBipartite {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Constructive (omega + 2)-coloring of a connected twin-free split graph.
    ColorSplit {
        #[command(flatten)]
        input: GraphInput,
        /// Clique side of the partition; searched for when omitted.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// The 3-colorability reduction gadget.
    Reduce {
        #[command(subcommand)]
        action: Reduce,
    },
    /// Tabulate metrics over a graph family and check assertions.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ConstructOut {
    /// Emit DOT, filled with the canonical coloring when there is one.
    #[arg(long)]
    pub dot: bool,
    #[arg(long, value_enum, default_value_t = GraphOut::Edgelist)]
    pub to: GraphOut,
    /// Also write the canonical coloring here.
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// K_{1,p}.
    Star {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// (k-1)-th power of the path on 2k vertices.
    PowerPath {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    Hp {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    Q1 {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    Q2 {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Twin expansion of the subdivided complete graph.
    Prop1 {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Subdivision gadget of an input graph.
    Gstar {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: ConstructOut,
    },
}

#[derive(Subcommand, Debug)]
pub enum Reduce {
    /// Write the gadget graph.
    Build {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = GraphOut::Edgelist)]
        to: GraphOut,
    },
    /// Extend a proper coloring of the graph to the gadget.
    Lift {
        #[command(flatten)]
        input: GraphInput,
        coloring: PathBuf,
        #[arg(short, long, default_value_t = 3)]
        k: u32,
    },
    /// Restrict an rlid-coloring of the gadget to the original vertices.
    Project {
        #[command(flatten)]
        input: GraphInput,
        /// Coloring of the gadget built from GRAPH.
        coloring: PathBuf,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// all, connected, bipartite, twin-free, split, random-split or random-twins.
    #[arg(long, default_value = "connected")]
    pub family: String,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// One graph per isomorphism class.
    #[arg(long)]
    pub unlabeled: bool,
    /// Columns, comma-separated (n, omega, rlid, lid, id, chromatic, gammaid).
    #[arg(long, value_delimiter = ',', default_value = "n,omega,rlid")]
    pub metrics: Vec<String>,
    /// Comparison such as `rlid<=3` or `rlid<=gammaid+1`; repeatable.
    #[arg(long = "assert")]
    pub assertions: Vec<String>,
    /// Random families: number of instances.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub clique: usize,
    #[arg(long, default_value_t = 3)]
    pub stable: usize,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 5)]
    pub base_n: usize,
    #[arg(long, default_value_t = 2)]
    pub twins: usize,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Print only rows whose verdict is not pass.
    #[arg(long)]
    pub failures_only: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rlid: error[{}]: {}", e.kind, e.message);
            ExitCode::from(e.code)
        }
    }
}
