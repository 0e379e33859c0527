//! `fishburn`: compute r-Fishburn numbers, residue sets, congruence checks
//! and relation spaces from the command line.
//!
//! Exit status is 0 when every check passes, 1 on a failed check and 2 on
//! bad arguments.

mod commands;
mod config;
mod render;

use std::fs;
use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, RunConfig};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<fishburn::Error> for CliError {
    fn from(e: fishburn::Error) -> Self {
        use fishburn::Error::*;
        match e {
            BadParams(_)
            | ZeroR
            | NotInTStar { .. }
            | InsufficientData
            | DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let report = commands::run(&cfg)?;
    let body = render::render(&report, cfg.format);
    match &cfg.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError::Failed(format!("writing {}: {e}", path.display())))?,
        None => print!("{body}"),
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
