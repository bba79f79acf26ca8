use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

mod commands;
mod covering;
mod json;

/// Exact computations for coverings of tori and monomial radical systems.
#[derive(Parser, Debug)]
#[command(name = "toruscover", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Cap on group elements enumerated for permutation inputs.
    #[arg(long, env = "TORUSCOVER_CAP", default_value_t = toruscover::permcover::DEFAULT_CAP, global = true)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Human,
}

/// A covering given by a kernel basis, a permutation action or a covering document.
#[derive(Args, Debug)]
pub struct CoveringArgs {
    /// Kernel lattice basis as a JSON matrix, one generator per row.
    #[arg(long, conflicts_with_all = ["perms", "covering"])]
    kernel: Option<String>,
    /// Dimension of the torus; required when the kernel has no rows.
    #[arg(long, requires = "kernel")]
    dim: Option<usize>,
    /// Monodromy as JSON list of permutations in one-line notation (0-based).
    #[arg(long, conflicts_with = "covering")]
    perms: Option<String>,
    /// Fiber size; required when `--perms` is the empty list.
    #[arg(long, requires = "perms")]
    fiber_size: Option<usize>,
    /// Covering document: {"kernel": [[..]], "dim": n} or {"perms": [[..]]}.
    #[arg(long)]
    covering: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalAction {
    /// Minimal dimension the system can be induced from.
    Mindim,
    /// Kernel lattice of the monodromy.
    Kernel,
    /// Normal form of the monodromy covering.
    Classify,
    /// Whether extensions of dimensions `--dims` can suffice.
    Tower,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form U·A·V = D.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Row-style Hermite normal form U·A = H.
    Hnf {
        #[arg(long)]
        matrix: String,
    },
    /// Normal form of a covering.
    Classify(CoveringArgs),
    /// Minimal dimension a covering can be induced from.
    Mindim(CoveringArgs),
    /// Whether two coverings (two `--covering` documents) are equivalent.
    Equivalent {
        #[arg(long, num_args = 1, required = true)]
        covering: Vec<String>,
    },
    /// Whether the first connected covering dominates the second.
    Dominates {
        #[arg(long, num_args = 1, required = true)]
        covering: Vec<String>,
    },
    /// Pullback along the covering torus with fundamental group `--subgroup`.
    Pullback {
        #[command(flatten)]
        input: CoveringArgs,
        /// Full-rank sublattice basis as a JSON matrix.
        #[arg(long)]
        subgroup: String,
    },
    /// max(0, k - Σ k_i) for a tower of stages of the given dimensions.
    TowerBound {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
    },
    /// Cup-product obstruction class of a covering.
    Charclass(CoveringArgs),
    /// Monomial radicals in `--vars` variables, each `a1,...,an:m`.
    Radical {
        #[arg(long)]
        vars: usize,
        #[arg(long = "radical")]
        radicals: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(value_enum)]
        action: RadicalAction,
    },
    /// Coordinate-permutation stabilizer of a linear flag.
    Flag {
        /// JSON list of steps, each a list of equations Σ c_i z_i = 0.
        #[arg(long, required_unless_present_any = ["pairing", "quadruple"], conflicts_with_all = ["pairing", "quadruple"])]
        equations: Option<String>,
        /// Ambient dimension for `--equations`; defaults to the equation length.
        #[arg(long, requires = "equations")]
        dim: Option<usize>,
        #[arg(long, conflicts_with = "quadruple")]
        pairing: Option<usize>,
        #[arg(long)]
        quadruple: Option<usize>,
    },
    /// Lower bound for the universal function of a given degree.
    Universal {
        #[arg(long)]
        degree: usize,
    },
    /// Lower bound once the square root of the discriminant is adjoined.
    UniversalDisc {
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Debug)]
pub struct CliError {
    code: String,
    message: String,
    exit: u8,
}

impl CliError {
    pub fn validation(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.into(), message: message.into(), exit: 2 }
    }

    pub fn computation(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.into(), message: message.into(), exit: 3 }
    }
}

impl From<toruscover::Error> for CliError {
    fn from(e: toruscover::Error) -> Self {
        let exit = if e.is_validation() { 2 } else { 3 };
        CliError { code: e.code().into(), message: e.to_string(), exit }
    }
}

/// A result in both output formats.
pub struct Rendered {
    pub json: Value,
    pub human: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.cap) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Human => println!("{}", out.human),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let line = json::object([("error", Value::from(e.code)), ("message", Value::from(e.message))]);
            eprintln!("{line}");
            ExitCode::from(e.exit)
        }
    }
}
