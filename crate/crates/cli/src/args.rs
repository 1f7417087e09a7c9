//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sgut",
    version,
    about = "Exact Steiner-distance graph invariants and bound verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute SGut_k, SW_k, SDD_k and Gut for the input graphs.
    Compute(ComputeArgs),
    /// Evaluate bounds on the input graphs.
    Bounds(BoundsArgs),
    /// Emit a member of a standard graph family.
    Family(FamilyArgs),
    /// Check bounds exhaustively over all small graphs.
    Verify(VerifyArgs),
    /// Compare the printed closed forms with direct computation.
    AuditFormulas(AuditArgs),
    /// Find the graphs extremizing an index over all small graphs.
    Extremal(ExtremalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// One graph6 string per line.
    G6,
    /// `n <order>` followed by `u v` lines; `#` starts a comment.
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Input file, or `-` for standard input.
    #[arg(long, value_name = "FILE|-")]
    pub graph: String,
    #[arg(long, value_enum, default_value = "g6")]
    pub format: GraphFormat,
}

/// A `k` value or every `k` from 2 to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KArg {
    All,
    Value(usize),
}

impl std::str::FromStr for KArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(KArg::All);
        }
        s.parse()
            .map(KArg::Value)
            .map_err(|_| format!("expected an integer or `all`, got `{s}`"))
    }
}

impl KArg {
    /// The `k` values to use for a graph of order `n`.
    pub fn values(self, n: usize) -> Vec<usize> {
        match self {
            KArg::All => (2..=n).collect(),
            KArg::Value(k) => vec![k],
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// `k`, or `all` for 2..=n.
    #[arg(long, default_value = "all")]
    pub k: KArg,
    /// Comma-separated subset of sgut,sw,sdd,gut.
    #[arg(long, value_delimiter = ',', default_value = "sgut,sw,sdd,gut")]
    pub indices: Vec<Index>,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Index {
    Sgut,
    Sw,
    Sdd,
    Gut,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// `k`, or `all` for 2..=n.
    #[arg(long, default_value = "all")]
    pub k: KArg,
    /// `all`, family names (prop21, lem22, thm32, cor41, ps, amgm) or bound ids.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub set: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutputFormat,
    /// Add a decimal rendering of each bound, truncated to this many digits.
    #[arg(long, value_name = "DIGITS")]
    pub decimal: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// path, cycle, star, complete or kn-minus-matching.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "g6")]
    pub emit: GraphFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep every order from 1 to this one.
    #[arg(long)]
    pub n_max: usize,
    /// One representative per isomorphism class instead of every labelled graph.
    #[arg(long)]
    pub dedup: bool,
    /// Only graphs whose complement is connected too.
    #[arg(long)]
    pub coconnected: bool,
    /// `all`, `audit`, family names or bound ids.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub set: Vec<String>,
    /// Restrict the sweep to these `k` (default: every `k`).
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// JSON report path (an array with one report per order).
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    /// Also write one CSV row per check to this path.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Worker threads; the result does not depend on this.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Add a decimal rendering of each bound, truncated to this many digits.
    #[arg(long, value_name = "DIGITS")]
    pub decimal: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub out: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    /// Only graphs whose complement is connected (implied for sums and products).
    #[arg(long)]
    pub coconnected: bool,
    /// Scan every labelled graph instead of one per isomorphism class.
    #[arg(long)]
    pub labelled: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    MaxSgut,
    MinSgut,
    MaxSum,
    MinSum,
    MaxProduct,
    MinProduct,
}
