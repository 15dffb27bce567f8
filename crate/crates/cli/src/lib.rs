//! The `weda` command-line tool: exact and approximate weighted edit
//! distance, bicriteria alignment feasibility, hardness-instance generation,
//! oracle verification and probe-count benchmarks.
//!
//! Exit codes are `0` on success or `PASS`, `1` on a verification `FAIL`
//! and `2` on usage errors.

pub mod bench;
mod commands;
mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::RunReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "weda", version, about = "Weighted edit distance where substitutions cost 1/a")]
pub struct Cli {
    /// Print a JSON report instead of human-readable lines.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact ED_a if at most k.
    Exact(ExactArgs),
    /// Randomized (1+eps)-gap decision for ED_a <= k.
    Approx(ApproxArgs),
    /// (k_I, k_S)-alignment feasibility.
    Bicriteria(BicriteriaArgs),
    /// Generate an orthogonal-vectors hardness instance.
    GenGadget(GenGadgetArgs),
    /// Check a bundle or a distance claim against the oracle.
    Verify(VerifyArgs),
    /// Measure wall time and probe counts over growing sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// File holding X (raw bytes).
    #[arg(conflicts_with = "x_str")]
    pub x_file: Option<PathBuf>,
    /// File holding Y (raw bytes).
    #[arg(conflicts_with = "y_str")]
    pub y_file: Option<PathBuf>,
    /// X given inline.
    #[arg(long)]
    pub x_str: Option<String>,
    /// Y given inline.
    #[arg(long)]
    pub y_str: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Substitution weight parameter (substitutions cost 1/a).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
    /// Threshold as "p/q" or a decimal.
    #[arg(long)]
    pub k: String,
    #[arg(long)]
    pub count_probes: bool,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
    #[arg(long)]
    pub k: String,
    /// Accuracy in (0, 1) as "p/q" or a decimal.
    #[arg(long)]
    pub eps: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub count_probes: bool,
}

#[derive(Debug, Args)]
pub struct BicriteriaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Indel budget.
    #[arg(long)]
    pub ki: usize,
    /// Substitution budget.
    #[arg(long)]
    pub ks: usize,
    #[arg(long, conflicts_with = "exact")]
    pub eps: Option<String>,
    #[arg(long, conflicts_with = "exact")]
    pub seed: Option<u64>,
    /// Decide exactly.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub count_probes: bool,
}

#[derive(Debug, Args)]
pub struct GenGadgetArgs {
    /// Vectors per side.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Dimension.
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
    /// Blocks per side, 1 <= m <= n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Probability of a one in each random coordinate.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    /// ED_a <= k.
    Within,
    /// ED_a > k.
    Exceeds,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Directory written by gen-gadget.
    #[arg(long, conflicts_with_all = ["x_file", "x_str", "a", "k"])]
    pub bundle: Option<PathBuf>,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: Option<u64>,
    #[arg(long)]
    pub k: Option<String>,
    /// The claim to check for a string pair.
    #[arg(long, value_enum, default_value_t = Expect::Within)]
    pub expect: Expect,
    /// Refuse oracle runs beyond this many DP cells.
    #[arg(long)]
    pub cell_limit: Option<u128>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// One of exact, approx, bicriteria, lce.
    #[arg(long)]
    pub suite: String,
    /// Comma-separated sizes: thresholds k for the exact suite, lengths n otherwise.
    #[arg(long)]
    pub sizes: String,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the rows here instead of stdout.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    #[arg(long, default_value_t = 16)]
    pub a: u64,
    /// Threshold for the approx suite; k_S for bicriteria; d for lce.
    #[arg(long, default_value = "4")]
    pub k: String,
    #[arg(long, default_value = "1/2")]
    pub eps: String,
    /// String length for the exact suite.
    #[arg(long, default_value_t = 1 << 16)]
    pub n: usize,
}

/// Failure of a command before it could produce a report.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Runtime(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl From<weda_core::Error> for CliError {
    fn from(e: weda_core::Error) -> Self {
        match e {
            weda_core::Error::Contract(_) | weda_core::Error::Parse(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.into()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// A finished command: what to print and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub exit: i32,
}

/// Runs a parsed command without printing.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut out = match &cli.command {
        Command::Exact(a) => commands::exact(a)?,
        Command::Approx(a) => commands::approx(a)?,
        Command::Bicriteria(a) => commands::bicriteria(a)?,
        Command::GenGadget(a) => commands::gen_gadget(a)?,
        Command::Verify(a) => commands::verify(a)?,
        Command::Bench(a) => bench::bench(a, cli.timing)?,
    };
    if !cli.timing {
        out.report.wall_time_ms = None;
    }
    Ok(out)
}

/// Runs a parsed command, prints its report, and returns the exit code.
pub fn execute(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    match run(cli) {
        Ok(out) => {
            let text = if cli.json { out.report.to_json() } else { out.report.to_human() };
            if writeln!(stdout, "{text}").is_err() {
                return EXIT_USAGE;
            }
            out.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            EXIT_USAGE
        }
    }
}
