//! Command line front end for Gelfond-Bézier curves: basis tables, curve
//! sampling, de Casteljau traces, corner cutting, joins and route comparisons.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;

pub use args::{Cli, Command};
pub use config::RunConfig;
pub use error::{CliError, Result};

/// Merges flags over the optional config file and runs the command.
pub fn run(cli: Cli) -> Result<(RunConfig, String)> {
    let (name, flags) = cli.command.into_config()?;
    let cfg = match &cli.config {
        Some(path) => flags.over(RunConfig::read(path)?),
        None => flags,
    };
    if let Some(c) = &cfg.command {
        if c != name {
            return Err(CliError::input(format!("config is for command {c:?}, not {name:?}")));
        }
    }
    let cfg = cfg.resolve_curve()?;
    let text = match name {
        "basis" => commands::cmd_basis(&cfg)?,
        "curve" => commands::cmd_curve(&cfg)?,
        "decasteljau" => commands::cmd_decasteljau(&cfg)?,
        "elevate" => commands::cmd_elevate(&cfg)?,
        "insert" => commands::cmd_insert(&cfg)?,
        "join" => commands::cmd_join(&cfg)?,
        _ => commands::cmd_oracle(&cfg)?,
    };
    Ok((cfg, text))
}
