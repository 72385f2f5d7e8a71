mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "gbg", version, about = "Configuration spaces and braid groups of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build UC_n(G) and report cube counts and components.
    Uc(UcArgs),
    /// Cut along the hyperplanes of edges sharing a vertex and assemble the group.
    Decompose(DecomposeArgs),
    /// Integral homology of UC_n(G).
    Homology(HomologyArgs),
    /// Specialness, subdivision, free-product criteria and Z^2 witnesses.
    Check(CheckArgs),
    /// Presentation of the fundamental group of UC_n(G).
    Presentation(PresentationArgs),
    /// List the group-resolution strategies.
    Strategies(OutputArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct Input {
    /// Graph JSON: {"vertices": [...], "edges": [[u, v], ...]}.
    #[arg(long)]
    pub graph: PathBuf,
    /// Number of particles.
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Replace the graph by its sufficient subdivision for n first.
    #[arg(long)]
    pub subdivide: bool,
}

#[derive(Args)]
pub struct UcArgs {
    #[command(flatten)]
    pub input: Input,
    /// Build cubes only up to this dimension.
    #[arg(long)]
    pub max_dim: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: Input,
    /// Cut edges as u:v pairs, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub cut: Vec<String>,
    /// Strategies to use, in order (default: all).
    #[arg(long, value_delimiter = ',')]
    pub resolvers: Option<Vec<String>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub input: Input,
    /// Also write each boundary matrix as coordinate triplets into this directory.
    #[arg(long)]
    pub dump_matrices: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: Input,
    /// Search for a decomposition exhibiting each certificate's free splitting.
    #[arg(long)]
    pub witness: bool,
    #[arg(long, value_delimiter = ',')]
    pub resolvers: Option<Vec<String>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args)]
pub struct PresentationArgs {
    #[command(flatten)]
    pub input: Input,
    /// Skip Tietze simplification.
    #[arg(long)]
    pub raw: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, result) = match &cli.command {
        Command::Uc(a) => (&a.output, commands::uc(a)),
        Command::Decompose(a) => (&a.output, commands::decompose(a)),
        Command::Homology(a) => (&a.output, commands::homology(a)),
        Command::Check(a) => (&a.output, commands::check(a)),
        Command::Presentation(a) => (&a.output, commands::presentation(a)),
        Command::Strategies(o) => (o, commands::strategies()),
    };
    match result.and_then(|report| report.emit(output)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
