//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exact computations on spaces of morphisms and their mutations.
#[derive(Clone, Debug, Parser)]
#[command(name = "mutation-forge", version)]
pub struct Cli {
    /// Shared run settings.
    #[command(flatten)]
    pub config: RunConfig,
    /// The subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Output format.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Pretty JSON.
    Json,
    /// Comma-separated rows; only `sweep` produces tables.
    Csv,
}

/// Settings recorded in every output.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RunConfig {
    /// Base field: `rationals` or `gf:p`.
    #[arg(long, global = true, default_value = "rationals")]
    pub field: String,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of subspace families or points visited.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget_subspaces: u64,
    /// Largest number of unipotent group elements visited.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget_orbit: u64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Run the additional witness checks.
    #[arg(long, global = true)]
    pub verify: bool,
}

/// Which group decides stability.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    /// The reductive part only.
    Reductive,
    /// The full non-reductive group.
    Full,
}

/// Which condition family of the quotient theorems is evaluated.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    /// Case 1.
    #[value(name = "1")]
    One,
    /// Case 2.
    #[value(name = "2")]
    Two,
    /// Both cases.
    Both,
}

/// The subcommands.
#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Check the defining conditions of a space or of composition data.
    Validate {
        /// Problem file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Mutate a point of `W⁰`.
    Mutate {
        /// Problem file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the dual space and compare its dual with the original.
    Dual {
        /// Problem file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Decide (semi)stability by exhaustive search over a prime field.
    Stability {
        /// Problem file.
        #[arg(long)]
        input: PathBuf,
        /// Group deciding the verdict.
        #[arg(long, value_enum, default_value_t = GroupArg::Full)]
        group: GroupArg,
    },
    /// Transport a polarization to the mutated type.
    Polarization {
        /// Problem file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Bound `c(σ, m)` by witnesses and subspace scans.
    Constants {
        /// `0` for contraction, `1` for multiplication.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        sigma: u8,
        /// Dimension of the projective space.
        #[arg(long)]
        n: usize,
        /// Dimension of the multiplicity space.
        #[arg(long)]
        m: usize,
        /// Random subspaces drawn when no exhaustive scan runs.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Prime over which to scan every subspace.
        #[arg(long)]
        exhaustive_prime: Option<u32>,
    },
    /// Evaluate the quotient conditions at one value of `t`.
    Thresholds {
        #[command(flatten)]
        shape: ShapeArgs,
        /// The parameter `t`, as an exact rational.
        #[arg(long)]
        t: String,
        /// Condition family.
        #[arg(long, value_enum, default_value_t = CaseArg::Both)]
        case: CaseArg,
    },
    /// Singular values of the two worked families on `P^n`.
    Singular {
        /// Dimension of the projective space.
        #[arg(long)]
        n: usize,
        /// `k` for the second family; the first family when absent.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evaluate the quotient conditions on a grid of `t` with the singular values inserted.
    Sweep {
        #[command(flatten)]
        shape: ShapeArgs,
        /// The grid is `j/steps` for `0 < j < steps`.
        #[arg(long, default_value_t = 20)]
        steps: usize,
        /// Condition family.
        #[arg(long, value_enum, default_value_t = CaseArg::Both)]
        case: CaseArg,
    },
}

/// Multiplicities of `m1 O(-2) ⊕ m2 O(-1) → n1 O` on `P^n`.
#[derive(Clone, Debug, Args)]
pub struct ShapeArgs {
    /// Dimension of the projective space.
    #[arg(long)]
    pub n: usize,
    /// `m1`.
    #[arg(long)]
    pub m1: usize,
    /// `m2`.
    #[arg(long)]
    pub m2: usize,
    /// `n1`.
    #[arg(long)]
    pub n1: usize,
}
