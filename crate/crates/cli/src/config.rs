//! Run configuration shared by flags and `--config` files.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use gelfond_core::dimelev::{ExponentSource, TailRule};
use gelfond_core::partitions::ExponentSequence;
use gelfond_core::points::Point;
use gelfond_core::scalar::{Rational, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A number written either as a JSON number or as a string (`"3/7"`, `"2.5"`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Text(String),
}

impl Number {
    pub fn value(&self) -> Result<f64> {
        match self {
            Self::Float(x) => Ok(*x),
            Self::Text(s) => parse_number(s),
        }
    }
}

impl From<f64> for Number {
    fn from(x: f64) -> Self {
        Self::Float(x)
    }
}

fn parse_number(s: &str) -> Result<f64> {
    let s = s.trim();
    let x = if s.contains('/') {
        Rational::from_str(s).map(|q| q.to_f64()).ok()
    } else {
        s.parse::<f64>().ok()
    };
    match x {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(CliError::input(format!("not a number: {s:?}"))),
    }
}

/// `0,3,4,6,9` or `0,1/2,3`.
pub fn parse_list(s: &str) -> Result<Vec<Number>> {
    s.split(',')
        .map(|x| {
            parse_number(x)?;
            Ok(Number::Text(x.trim().to_string()))
        })
        .collect()
}

/// Points separated by `;`, coordinates by `,`: `0,0;1,2;3,1`.
pub fn parse_points(s: &str) -> Result<Vec<Vec<Number>>> {
    s.split(';').map(parse_list).collect()
}

pub fn values(list: &[Number]) -> Result<Vec<f64>> {
    list.iter().map(Number::value).collect()
}

pub fn exponents(list: &[Number]) -> Result<ExponentSequence> {
    Ok(ExponentSequence::new(values(list)?)?)
}

pub fn points(list: &[Vec<Number>]) -> Result<Vec<Point>> {
    list.iter().map(|p| values(p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ClosedForm {
    Elementary,
    Complete,
    Hook,
}

/// Exponent sources for corner cutting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// (0,1,2,3) continued by 2j
    Linear,
    /// (0,1,2,3) continued by j²
    Quadratic,
    /// (0,2,4,14) continued by 2j+10
    Affine,
    /// (0,1,2,3) continued by j
    Classical,
}

impl Preset {
    pub fn source(self) -> ExponentSource {
        match self {
            Self::Linear => ExponentSource::linear_preset(),
            Self::Quadratic => ExponentSource::quadratic_preset(),
            Self::Affine => ExponentSource::affine_preset(),
            Self::Classical => ExponentSource::classical(3),
        }
    }
}

/// `affine:SLOPE,INTERCEPT`, `quadratic` or `power:P`.
pub fn parse_tail(s: &str) -> Result<TailRule> {
    let bad = || CliError::input(format!("bad tail rule {s:?}; use affine:a,b, quadratic or power:p"));
    let (kind, args) = s.split_once(':').unwrap_or((s, ""));
    match kind.trim() {
        "quadratic" if args.is_empty() => Ok(TailRule::Quadratic),
        "power" => Ok(TailRule::Power(parse_number(args).map_err(|_| bad())?)),
        "affine" => {
            let v = values(&parse_list(args).map_err(|_| bad())?)?;
            match v[..] {
                [slope, intercept] => Ok(TailRule::Affine { slope, intercept }),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

/// A curve as stored on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub exponents: Vec<Number>,
    #[serde(default = "unit_interval")]
    pub interval: [Number; 2],
    pub points: Vec<Vec<Number>>,
}

fn unit_interval() -> [Number; 2] {
    [Number::Float(0.0), Number::Float(1.0)]
}

impl CurveRecord {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn from_values(exponents: Vec<Number>, interval: (f64, f64), points: &[Point]) -> Self {
        Self {
            exponents,
            interval: [interval.0.into(), interval.1.into()],
            points: points.iter().map(|p| p.iter().map(|&x| x.into()).collect()).collect(),
        }
    }
}

/// Everything a command can read. Flags and config files share this schema;
/// a flag given on the command line wins over the file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub command: Option<String>,
    pub exponents: Option<Vec<Number>>,
    /// Further exponent lists drawn with the same control points.
    pub compare: Vec<Vec<Number>>,
    pub points: Option<Vec<Vec<Number>>>,
    /// Curve record supplying exponents, interval and points not given otherwise.
    pub curve: Option<PathBuf>,
    pub interval: Option<[Number; 2]>,
    pub samples: Option<usize>,
    pub tolerance: Option<f64>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub t: Option<f64>,
    pub rho: Option<Number>,
    pub closed_form: Option<ClosedForm>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub preset: Option<Preset>,
    pub tail: Option<String>,
    pub iterations: Option<usize>,
    pub frames: Option<PathBuf>,
    pub right_exponents: Option<Vec<Number>>,
    pub right_interval: Option<[Number; 2]>,
    pub right_points: Option<Vec<Vec<Number>>>,
}

macro_rules! prefer {
    ($top:ident, $base:ident; $($field:ident),*) => {
        RunConfig { $($field: $top.$field.or($base.$field),)* ..$top }
    };
}

impl RunConfig {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Fields of `self` override `base`.
    pub fn over(self, base: RunConfig) -> RunConfig {
        let compare = if self.compare.is_empty() { base.compare.clone() } else { self.compare.clone() };
        let merged = prefer!(self, base; command, exponents, points, curve, interval, samples,
            tolerance, format, output, t, rho, closed_form, l, m, n, preset, tail, iterations,
            frames, right_exponents, right_interval, right_points);
        RunConfig { compare, ..merged }
    }

    /// Fills exponents, interval and points from the `curve` file where unset.
    pub fn resolve_curve(mut self) -> Result<Self> {
        if let Some(path) = &self.curve {
            let rec = CurveRecord::read(path)?;
            self.exponents.get_or_insert(rec.exponents);
            self.interval.get_or_insert(rec.interval);
            self.points.get_or_insert(rec.points);
        }
        Ok(self)
    }

    pub fn samples_or(&self, default: usize) -> Result<usize> {
        let s = self.samples.unwrap_or(default);
        if s < 2 {
            return Err(CliError::input(format!("samples must be at least 2, got {s}")));
        }
        Ok(s)
    }

    pub fn exponent_list(&self) -> Result<&[Number]> {
        self.exponents.as_deref().ok_or_else(|| CliError::input("missing --exponents"))
    }

    pub fn point_list(&self) -> Result<Vec<Point>> {
        points(self.points.as_deref().ok_or_else(|| CliError::input("missing --points"))?)
    }

    pub fn interval_values(&self) -> Result<(f64, f64)> {
        interval(self.interval.as_ref())
    }
}

pub fn interval(iv: Option<&[Number; 2]>) -> Result<(f64, f64)> {
    match iv {
        Some([a, b]) => Ok((a.value()?, b.value()?)),
        None => Ok((0.0, 1.0)),
    }
}
