//! `hypermajority`: colour, verify, round, and generate hypergraphs from the
//! command line.
//!
//! Exit codes: 0 success, 1 invalid colouring or exhausted run, 2 bad input
//! or unmet precondition, 3 self-verification failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypermajority::genlab::Model;
use hypermajority::lll::DEFAULT_SEED;

use output::{Format, Reporter, Sink};

#[derive(Debug, Parser)]
#[command(name = "hypermajority", version, about = "1/k-majority edge-colourings of hypergraphs")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomised steps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Skip the automatic check of produced colourings and roundings.
    #[arg(long, global = true)]
    pub no_verify: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Partition,
    Linear,
    RandomLll,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Partition => "partition",
            Algorithm::Linear => "linear",
            Algorithm::RandomLll => "random-lll",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colour the edges of a hypergraph.
    Colour(ColourArgs),
    /// Check a colouring; violations go to stderr.
    Verify(VerifyArgs),
    /// Round fractional edge weights to 0/1.
    Round(RoundArgs),
    /// Smallest minimum degree for the local-lemma colourer.
    Threshold(ThresholdArgs),
    /// Write a random hypergraph.
    Generate(GenerateArgs),
    /// Exhaustive search for a colouring with a given palette.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct ColourArgs {
    #[arg(long, value_enum)]
    pub algorithm: Algorithm,

    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub k: u64,

    /// Input hypergraph (HGR).
    pub input: PathBuf,

    /// Output colouring; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Per-round trace (partition only); stderr unless `--trace=<path>`.
    #[arg(long, num_args = 0..=1, require_equals = true, value_name = "PATH")]
    pub trace: Option<Option<PathBuf>>,

    /// Write the vertex split (linear only).
    #[arg(long, value_name = "PATH")]
    pub emit_split: Option<PathBuf>,

    /// Resampling budget (random-lll); default 10000 * |E|.
    #[arg(long)]
    pub max_rounds: Option<usize>,

    /// Independent runs with seeds `seed, seed + 1, ...` (random-lll).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    /// Worker threads for `--trials`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    pub hypergraph: PathBuf,
    pub colouring: PathBuf,
}

#[derive(Debug, Args)]
pub struct RoundArgs {
    pub hypergraph: PathBuf,
    pub weights: PathBuf,

    /// Output 0/1 weights; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Iteration trace; stderr unless `--trace=<path>`.
    #[arg(long, num_args = 0..=1, require_equals = true, value_name = "PATH")]
    pub trace: Option<Option<PathBuf>>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub r: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub min_degree: usize,

    /// Output HGR; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub palette: u64,
    pub hypergraph: PathBuf,

    /// Output colouring when one exists; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: hypermajority::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reporter = Reporter {
        format: cli.format,
        sink: Sink::Stdout,
    };
    match commands::dispatch(&cli, reporter) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !matches!(failure, output::Failure::Invalid) {
                eprintln!("{failure}");
            }
            failure.exit_code()
        }
    }
}
