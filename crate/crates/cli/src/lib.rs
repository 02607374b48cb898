//! The `ehrlatt` command line: argument parsing, the five commands, and
//! report rendering.

pub mod commands;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{
    cmd_compare, cmd_count, cmd_ehrhart, cmd_reflexive, cmd_surface, Method, Outcome, Status,
};
pub use report::Report;

/// Exit status for unreadable or invalid input.
pub const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ehrlatt",
    version,
    about = "Exact lattice point counts, Ehrhart polynomials and lattice surface areas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lattice points of kP: total, interior, boundary
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long = "k", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Lattice surface area by one method
    Surface {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// Ehrhart coefficients, volume, surface and reciprocity checks
    Ehrhart {
        #[command(flatten)]
        common: Common,
    },
    /// Fano and reflexive status, dual vertices and volume identities
    Reflexive {
        #[command(flatten)]
        common: Common,
    },
    /// Surface area by every method; exit status 1 if they differ
    Compare {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    /// Vertex file: a `d n` header, then n rows of d integers
    pub file: std::path::PathBuf,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Structured,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Count { common, .. }
            | Command::Surface { common, .. }
            | Command::Ehrhart { common }
            | Command::Reflexive { common }
            | Command::Compare { common } => common,
        }
    }

    /// Runs the command on already-read file contents.
    pub fn run(&self, text: &str) -> ehrlatt_core::Result<Outcome> {
        let verbose = self.common().verbose;
        match self {
            Command::Count { k, .. } => cmd_count(text, *k, verbose),
            Command::Surface { method, .. } => cmd_surface(text, *method, verbose),
            Command::Ehrhart { .. } => cmd_ehrhart(text, verbose),
            Command::Reflexive { .. } => cmd_reflexive(text, verbose),
            Command::Compare { .. } => cmd_compare(text, verbose),
        }
    }
}

pub fn render(report: &Report, output: Output) -> String {
    match output {
        Output::Text => report.to_text(),
        Output::Structured => report.to_structured(),
    }
}
