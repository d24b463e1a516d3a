mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Failures mapped onto the process exit status.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input (exit 2).
    Usage(String),
    /// An internal consistency check tripped (exit 3).
    Internal(String),
    /// A verification report failed (exit 4); the report is already printed.
    VerifyFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
            CliError::VerifyFailed(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(3);
        }
    }
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Table(a) => commands::table(&a),
        Command::Bench(a) => commands::bench(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) | CliError::Internal(m) => eprintln!("error: {m}"),
                CliError::VerifyFailed(witness) => eprintln!("verification failed: {witness}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
