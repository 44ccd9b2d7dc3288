use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use floer_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if let Some(message) = &outcome.error {
        eprintln!("floer: {message}");
        return ExitCode::from(outcome.status);
    }
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &outcome.output).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout().write_all(outcome.output.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("floer: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(outcome.status)
}
