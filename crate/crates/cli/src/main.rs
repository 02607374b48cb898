use std::process::ExitCode;

use clap::Parser;
use ehrlatt_cli::{render, Cli, EXIT_INPUT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.command.common();
    let text = match std::fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("ehrlatt: {}: {e}", common.file.display());
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    match cli.command.run(&text) {
        Ok(outcome) => {
            print!("{}", render(&outcome.report, common.output));
            ExitCode::from(outcome.status.code())
        }
        Err(e) => {
            eprintln!("ehrlatt: {}: {e}", common.file.display());
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}
