//! Argument definitions.

use std::path::PathBuf;

use chromstab::Parameter;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::suites::parse_range;

type Range = std::ops::RangeInclusive<usize>;

#[derive(Debug, Parser)]
#[command(
    name = "chromstab",
    version,
    about = "Exact chromatic and clique vertex-stability numbers, extremal families and claim verification"
)]
pub struct Cli {
    /// `key = value` settings file (keys: budget, seed, pretty); flags override it
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Search-node budget per independent computation
    #[arg(long, global = true, value_name = "NODES")]
    pub budget: Option<u64>,
    /// Seed for the random corpora of `verify`
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Pretty-print JSON
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph family as DIMACS (plus DOT and a JSON meta sidecar)
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Generate, check and certify CNF instances
    #[command(subcommand)]
    Sat(SatCommand),
    /// n, m, Δ, χ, ω and optionally stability numbers of a DIMACS graph
    Invariants(InvariantsArgs),
    /// Critical subgraphs, their union components and the vs = ivs pipeline
    Critical(CriticalArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GenOutput {
    /// DIMACS output path (stdout when omitted)
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Also write Graphviz DOT here
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Meta sidecar path (default: next to --out, extension .meta.json)
    #[arg(long, value_name = "FILE")]
    pub meta: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Central K_chi plus gadget copies
    Prop31 {
        #[arg(long)]
        chi: usize,
        /// Number of gadget copies (default 2)
        #[arg(long)]
        copies: Option<usize>,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Clique pairs sharing vertices around a central clique
    Constr1 {
        #[arg(long)]
        delta: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// C5 with every vertex blown up to K_k
    C5blowup {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GenOutput,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Plain,
    Augmented,
}

#[derive(Debug, Subcommand)]
pub enum SatCommand {
    /// Write the recursive unsatisfiable m-LIT (2m-1)-SAT instance
    Gen {
        #[arg(long)]
        m: usize,
        /// CNF output path (stdout when neither --cnf nor --graph is given)
        #[arg(long, value_name = "FILE")]
        cnf: Option<PathBuf>,
        /// Also emit the independence graph
        #[arg(long, value_enum)]
        graph: Option<GraphKind>,
        /// Graph output path (stdout when omitted)
        #[arg(long, value_name = "FILE", requires = "graph")]
        out: Option<PathBuf>,
        /// Meta sidecar path (default: next to --cnf, extension .meta.json)
        #[arg(long, value_name = "FILE")]
        meta: Option<PathBuf>,
    },
    /// Shape statistics and brute-force satisfiability of a DIMACS CNF
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Stability certificate for the generated family
    Certify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    pub file: PathBuf,
    /// Stability parameters to compute, e.g. `chi,omega`
    #[arg(long, value_delimiter = ',')]
    pub stability: Vec<Parameter>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    pub file: PathBuf,
    /// Enumerate all critical subgraphs up to --max-order
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long, requires = "enumerate")]
    pub max_order: Option<usize>,
    /// Run the vs = ivs certificate pipeline
    #[arg(long)]
    pub pipeline: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// prop31, prop31-variant, constr1, c5blowup, sat, tovey, fbounds, akbari, king, critical or all
    pub suite: String,
    #[arg(long, value_parser = parse_range, value_name = "A..B")]
    pub chi_range: Option<Range>,
    #[arg(long, value_parser = parse_range, value_name = "A..B")]
    pub delta_range: Option<Range>,
    #[arg(long, value_parser = parse_range, value_name = "A..B")]
    pub k_range: Option<Range>,
    #[arg(long, value_parser = parse_range, value_name = "A..B")]
    pub m_range: Option<Range>,
    /// Corpus size for the random suites
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub json: bool,
}
