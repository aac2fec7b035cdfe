//! `shiftfact` command-line front end.
//!
//! Exit codes: 0 on success, 1 when an identity or oracle check fails or an evaluation hits
//! a pole or an unsupported case, 2 on malformed input.

mod cli;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match commands::dispatch(&cli.command, cli.format) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {f}");
            return ExitCode::from(f.exit_code() as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{}", outcome.output);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match outcome.violation {
        Some(v) => {
            eprintln!("check failed: {v}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
