use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use schur_cli::{common_args, run, Cli, EXIT_CONFIG};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let written = match &common_args(&cli.command).out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(outcome.output.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_CONFIG as u8);
    }
    ExitCode::from(outcome.code as u8)
}
