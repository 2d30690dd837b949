//! Sweep configuration from command-line flags and an optional `key = value`
//! file. Flags override file values.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;
use num_complex::Complex64;

use crate::dynamics::{Scenario, ScenarioSpec};
use crate::error::{Error, Result};
use crate::fock::DEFAULT_TAIL_TOLERANCE;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub scenario: Scenario,
    pub alpha: Complex64,
    pub beta: Complex64,
    /// Mixing weight `C`.
    pub weight: f64,
    pub t_max: f64,
    /// Number of grid intervals; the sweep has `steps + 1` points.
    pub steps: usize,
    /// Fock truncation; 0 selects it from the amplitudes.
    pub dim: usize,
    pub oracle: bool,
    /// `None` writes to stdout.
    pub output: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            scenario: Scenario::FieldMixture,
            alpha: Complex64::new(4.0, 0.0),
            beta: Complex64::new(-4.0, 0.0),
            weight: 0.5,
            t_max: 25.0,
            steps: 1000,
            dim: 0,
            oracle: false,
            output: None,
        }
    }
}

impl SweepConfig {
    pub fn scenario_spec(&self) -> ScenarioSpec {
        let mut spec = ScenarioSpec {
            scenario: self.scenario,
            alpha: self.alpha,
            beta: self.beta,
            weight: self.weight,
            dim: self.dim,
            tail_tolerance: DEFAULT_TAIL_TOLERANCE,
        };
        if spec.dim == 0 {
            spec.dim = spec.auto_dim();
        }
        spec
    }

    /// Grid point `i` of `0..=steps`.
    pub fn time(&self, i: usize) -> f64 {
        i as f64 * self.t_max / self.steps as f64
    }

    /// Applies one setting by key (flag name without dashes).
    fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        match key {
            "scenario" => {
                self.scenario = match value {
                    "field-mixture" => Scenario::FieldMixture,
                    "atom-mixture" => Scenario::AtomMixture,
                    _ => {
                        return Err(format!(
                            "unknown scenario {value:?} (expected field-mixture or atom-mixture)"
                        ))
                    }
                }
            }
            "alpha" => self.alpha = parse_complex(value)?,
            "beta" => self.beta = parse_complex(value)?,
            "c" => {
                let c = parse_real(value)?;
                if !(0.0..=1.0).contains(&c) {
                    return Err(format!("mixing weight {c} outside [0, 1]"));
                }
                self.weight = c;
            }
            "tmax" => {
                let t = parse_real(value)?;
                if t <= 0.0 {
                    return Err(format!("t_max must be positive, got {t}"));
                }
                self.t_max = t;
            }
            "steps" => {
                let steps: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| format!("expected a positive integer, got {value:?}"))?;
                if steps < 2 {
                    return Err(format!("steps must be at least 2, got {steps}"));
                }
                self.steps = steps;
            }
            "dim" => {
                self.dim = value
                    .trim()
                    .parse()
                    .map_err(|_| format!("expected a non-negative integer, got {value:?}"))?;
            }
            "oracle" => {
                self.oracle = match value.trim() {
                    "true" | "on" | "yes" | "1" => true,
                    "false" | "off" | "no" | "0" => false,
                    _ => return Err(format!("expected a boolean, got {value:?}")),
                }
            }
            "output" => self.output = Some(PathBuf::from(value.trim())),
            _ => return Err(format!("unknown key {key:?}")),
        }
        Ok(())
    }
}

fn parse_real(value: &str) -> std::result::Result<f64, String> {
    let x: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("expected a number, got {value:?}"))?;
    if !x.is_finite() {
        return Err(format!("value must be finite, got {value:?}"));
    }
    Ok(x)
}

/// `"re,im"`, or a bare real part.
fn parse_complex(value: &str) -> std::result::Result<Complex64, String> {
    match value.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse_real(re)?, parse_real(im)?)),
        None => Ok(Complex64::new(parse_real(value)?, 0.0)),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "jc-entropy",
    about = "Field and atomic entropies for mixed-state Jaynes-Cummings dynamics, as CSV time series"
)]
struct CliArgs {
    /// field-mixture or atom-mixture
    #[arg(long)]
    scenario: Option<String>,
    /// Coherent amplitude α as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Second coherent amplitude β as "re,im" (field-mixture only)
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Mixing weight C in [0, 1]
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Final time λt
    #[arg(long, allow_hyphen_values = true)]
    tmax: Option<String>,
    /// Number of grid intervals (steps + 1 rows)
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    /// Fock truncation, 0 = automatic
    #[arg(long, allow_hyphen_values = true)]
    dim: Option<String>,
    /// Cross-check every point against the dense density-matrix oracle
    #[arg(long)]
    oracle: bool,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    output: Option<String>,
    /// `key = value` configuration file
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Applies a configuration file's settings on top of `cfg`.
pub fn apply_config_text(cfg: &mut SweepConfig, text: &str) -> Result<()> {
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigParse {
            line: idx + 1,
            message: format!("expected `key = value`, got {line:?}"),
        })?;
        cfg.set(key.trim(), value.trim())
            .map_err(|message| Error::ConfigParse {
                line: idx + 1,
                message,
            })?;
    }
    Ok(())
}

pub fn load_config_file(cfg: &mut SweepConfig, path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    apply_config_text(cfg, &text)
}

/// Builds a configuration from an argument list (including the program name).
/// `--help` and `--version` print and exit the process.
pub fn parse_config<I, T>(args: I) -> Result<SweepConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match CliArgs::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => return Err(Error::Usage(e.to_string())),
    };

    let mut cfg = SweepConfig::default();
    if let Some(path) = &cli.config {
        load_config_file(&mut cfg, path)?;
    }
    let flags = [
        ("scenario", &cli.scenario),
        ("alpha", &cli.alpha),
        ("beta", &cli.beta),
        ("c", &cli.c),
        ("tmax", &cli.tmax),
        ("steps", &cli.steps),
        ("dim", &cli.dim),
        ("output", &cli.output),
    ];
    for (key, value) in flags {
        if let Some(value) = value {
            cfg.set(key, value)
                .map_err(|msg| Error::Usage(format!("--{key}: {msg}")))?;
        }
    }
    if cli.oracle {
        cfg.oracle = true;
    }
    Ok(cfg)
}
