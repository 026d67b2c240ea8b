//! `burn`: command-line front end for the graphburn crate.
//!
//! Exit codes: 0 success, 1 verification or extraction failure, 2 malformed
//! input, 3 search budget exhausted.

mod args;
mod artifact;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Malformed(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
