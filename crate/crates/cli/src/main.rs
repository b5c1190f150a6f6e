//! `braidgate`: build, certify and test gate entanglers from the command line.
//!
//! Exit codes: 0 evaluation succeeded (and the check passed, where the
//! command asserts one), 1 check failed, 2 input or usage error.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use braidgate::Convention;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "braidgate", version, about = "Gate entanglers, Segre separability and Yang-Baxter checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build R, the pattern permutation P and the phase gate R·P.
    Construct(TensorArgs),
    /// Apply R to the uniform product state.
    Entangle(TensorArgs),
    /// Decide full separability of a state; cross-checks with the rank-1 oracle.
    Separability(TensorArgs),
    /// List the quadric generators for given dims.
    Generators(GeneratorArgs),
    /// Yang-Baxter residual of an R matrix.
    Ybe(OperatorArgs),
    /// Artin relations in the braid representation built from R.
    Braid(BraidArgs),
    /// Seeded random phases as a tensor file.
    Random(RandomArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write JSON here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Where a coefficient tensor comes from: `--input FILE`, or `--dims` with
/// `--random-phases --seed`.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Tensor or matrix JSON file.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Subsystem dimensions, comma separated (e.g. 3,3).
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Use seeded random unimodular phases instead of a file.
    #[arg(long = "random-phases", visible_alias = "phases")]
    pub phases: bool,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    PaperMatrix,
    Theorem,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::PaperMatrix => Convention::PaperMatrix,
            ConventionArg::Theorem => Convention::Theorem,
        }
    }
}

/// How an input becomes an R matrix for `ybe` and `braid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// Phase-decorated swap built from an N×N phase matrix.
    Delta,
    /// The gate entangler of an (N, N) coefficient tensor.
    Entangler,
    /// The plain tensor swap on C^N ⊗ C^N (needs only --dims).
    Swap,
    /// A dense N²×N² matrix file taken as R itself.
    Matrix,
}

#[derive(Debug, Clone, Args)]
pub struct TensorArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "theorem")]
    pub convention: ConventionArg,
    /// Separability tolerance on the normalized quadric residual.
    #[arg(long, default_value_t = braidgate::DEFAULT_SEPARABILITY_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct OperatorArgs {
    #[command(flatten)]
    pub source: Source,
    /// Defaults to `matrix` for a dense file and `delta` otherwise.
    #[arg(long, value_enum)]
    pub form: Option<Form>,
    #[arg(long, value_enum, default_value = "theorem")]
    pub convention: ConventionArg,
    #[arg(long, default_value_t = braidgate::DEFAULT_UNITARY_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct BraidArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Number of strands n.
    #[arg(long, default_value_t = 3)]
    pub strands: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RandomArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    #[arg(long, required = true)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Entangle(a) => commands::entangle(a),
        Command::Separability(a) => commands::separability(a),
        Command::Generators(a) => commands::generators(a),
        Command::Ybe(a) => commands::ybe(a),
        Command::Braid(a) => commands::braid(a),
        Command::Random(a) => commands::random(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
