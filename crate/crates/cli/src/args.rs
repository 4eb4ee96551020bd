use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scs_core::atsp::DEFAULT_EXACT_LIMIT;

#[derive(Debug, Parser)]
#[command(name = "scs", version, about = "Shortest common superstring approximations and overlap-bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a superstring of the strings in INPUT.
    Solve(SolveArgs),
    /// Run every algorithm on INPUT and tabulate the lengths.
    Compare(CompareArgs),
    /// Run the overlap-bound campaigns.
    Verify(VerifyArgs),
    /// Write a generated instance file.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Combined,
    S1,
    S2,
    Greedy,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathSolverArg {
    Exact,
    Half,
    Greedy,
}

#[derive(Debug, Clone, Args)]
pub struct SolverOpts {
    /// Max-ATSP-Path solver used by the s1 and combined algorithms.
    #[arg(long, value_enum, default_value_t = PathSolverArg::Exact)]
    pub path_solver: PathSolverArg,
    /// Largest node count handed to the exact solvers (memory grows as 2^n·n).
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = AlgoArg::Combined)]
    pub algo: AlgoArg,
    #[command(flatten)]
    pub solver: SolverOpts,
    /// Write a JSON report to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub solver: SolverOpts,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pairs,
    Cycles,
    Instances,
    Tight,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Trials per random campaign.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest k and n for the tight families.
    #[arg(long, default_value_t = 64)]
    pub max_param: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Include every report in the JSON output, not only violations.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Tight2,
    Tight3,
    Greedy,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Parameter of the tight families.
    #[arg(short = 'k', default_value_t = 1)]
    pub k: usize,
    /// Largest index for the greedy family, string count for random.
    #[arg(short = 'n', default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 12)]
    pub max_len: usize,
    #[arg(long, default_value_t = 2)]
    pub alphabet: u8,
    /// Output file; stdout when omitted. Tight and greedy families also get
    /// `<out>.expected.json`.
    #[arg(short = 'o', long)]
    pub out: Option<PathBuf>,
}
