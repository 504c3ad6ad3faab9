use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gelfond_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    match run(Cli::parse()).and_then(|(cfg, text)| emit(cfg.output.as_deref(), &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.map_or("stdout".into(), |p| p.display().to_string()), source };
    match path {
        Some(p) => std::fs::write(p, text).map_err(io),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}
