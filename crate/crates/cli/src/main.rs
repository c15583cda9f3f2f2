//! `signed-corona`: build products, compute and verify their spectra,
//! census them and search for cospectral pairs.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 unreadable input,
//! 3 an input violates a precondition.

mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use config::Cli;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
}

impl From<signed_corona::Error> for CliError {
    fn from(e: signed_corona::Error) -> Self {
        match e {
            signed_corona::Error::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// What a successful command prints, and whether its checks all held.
pub struct Outcome {
    pub stdout: String,
    pub verified: bool,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, verified: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
