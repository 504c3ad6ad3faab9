//! Flag definitions. Every flag maps onto a [`RunConfig`] field.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{parse_list, parse_points, ClosedForm, Format, Number, Preset, RunConfig};
use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "gelfond", version, about = "Gelfond-Bernstein bases and Gelfond-Bézier curves")]
pub struct Cli {
    /// JSON file with the same fields as the flags; flags win
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Args)]
pub struct Common {
    /// Write here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Number of parameter samples (at least 2)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    tolerance: Option<f64>,
}

/// A curve given inline or as a curve record file.
#[derive(Debug, Default, Args)]
pub struct CurveInput {
    /// Comma separated, leading 0, strictly increasing; `p/q` allowed
    #[arg(long)]
    exponents: Option<String>,
    /// Control points, `x,y;x,y;...`
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// JSON record {exponents, interval, points}
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Parameter interval `a,b` (default 0,1)
    #[arg(long, allow_hyphen_values = true)]
    interval: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of basis values and the unity residual
    Basis {
        #[arg(long)]
        exponents: Option<String>,
        /// Use a closed form instead of the generic route
        #[arg(long, value_enum)]
        closed_form: Option<ClosedForm>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Sample a curve, optionally next to curves with other exponents
    Curve {
        #[command(flatten)]
        input: CurveInput,
        /// Further exponent lists for the same control points (repeatable)
        #[arg(long)]
        compare: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Full de Casteljau triangle at one parameter
    Decasteljau {
        #[command(flatten)]
        input: CurveInput,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Corner cutting by repeated exponent insertion
    Elevate {
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// Initial exponents of a custom source
        #[arg(long)]
        exponents: Option<String>,
        /// Continuation of a custom source: affine:a,b | quadratic | power:p
        #[arg(long)]
        tail: Option<String>,
        /// Initial polygon (default (0,0),(0.2,0.6),(0.8,0.6),(1,0))
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        #[arg(long)]
        iterations: Option<usize>,
        /// Directory for one SVG per iteration
        #[arg(long)]
        frames: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Insert one exponent without changing the curve
    Insert {
        #[command(flatten)]
        input: CurveInput,
        #[arg(long)]
        rho: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// C¹ continuation of a curve on [b, c]
    Join {
        #[command(flatten)]
        input: CurveInput,
        #[arg(long)]
        right_exponents: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        right_interval: Option<String>,
        /// Control points after the first two of the right piece
        #[arg(long, allow_hyphen_values = true)]
        right_points: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare independent routes and print the largest deviations
    Oracle {
        #[arg(long)]
        exponents: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn list(s: Option<String>) -> Result<Option<Vec<Number>>> {
    s.as_deref().map(parse_list).transpose()
}

fn pts(s: Option<String>) -> Result<Option<Vec<Vec<Number>>>> {
    s.as_deref().map(parse_points).transpose()
}

fn pair(s: Option<String>) -> Result<Option<[Number; 2]>> {
    match list(s)? {
        Some(v) => <[Number; 2]>::try_from(v)
            .map(Some)
            .map_err(|_| CliError::input("an interval is two numbers a,b")),
        None => Ok(None),
    }
}

impl Common {
    fn apply(self, cfg: RunConfig) -> RunConfig {
        RunConfig {
            output: self.output,
            format: self.format,
            samples: self.samples,
            tolerance: self.tolerance,
            ..cfg
        }
    }
}

impl CurveInput {
    fn apply(self, cfg: RunConfig) -> Result<RunConfig> {
        Ok(RunConfig {
            exponents: list(self.exponents)?,
            points: pts(self.points)?,
            curve: self.curve,
            interval: pair(self.interval)?,
            ..cfg
        })
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Basis { .. } => "basis",
            Self::Curve { .. } => "curve",
            Self::Decasteljau { .. } => "decasteljau",
            Self::Elevate { .. } => "elevate",
            Self::Insert { .. } => "insert",
            Self::Join { .. } => "join",
            Self::Oracle { .. } => "oracle",
        }
    }

    /// The flags as a config, with unset flags left empty.
    pub fn into_config(self) -> Result<(&'static str, RunConfig)> {
        let name = self.name();
        let base = RunConfig::default();
        let cfg = match self {
            Self::Basis { exponents, closed_form, l, m, n, common } => common.apply(RunConfig {
                exponents: list(exponents)?,
                closed_form,
                l,
                m,
                n,
                ..base
            }),
            Self::Curve { input, compare, common } => {
                let compare = compare.iter().map(|s| parse_list(s)).collect::<Result<_>>()?;
                common.apply(input.apply(RunConfig { compare, ..base })?)
            }
            Self::Decasteljau { input, t, common } => {
                common.apply(input.apply(RunConfig { t, ..base })?)
            }
            Self::Elevate { preset, exponents, tail, points, iterations, frames, common } => {
                common.apply(RunConfig {
                    preset,
                    exponents: list(exponents)?,
                    tail,
                    points: pts(points)?,
                    iterations,
                    frames,
                    ..base
                })
            }
            Self::Insert { input, rho, common } => {
                let rho = rho.as_deref().map(parse_list).transpose()?.map(|mut v| v.remove(0));
                common.apply(input.apply(RunConfig { rho, ..base })?)
            }
            Self::Join { input, right_exponents, right_interval, right_points, common } => {
                common.apply(input.apply(RunConfig {
                    right_exponents: list(right_exponents)?,
                    right_interval: pair(right_interval)?,
                    right_points: pts(right_points)?,
                    ..base
                })?)
            }
            Self::Oracle { exponents, points, common } => common.apply(RunConfig {
                exponents: list(exponents)?,
                points: pts(points)?,
                ..base
            }),
        };
        Ok((name, cfg))
    }
}
