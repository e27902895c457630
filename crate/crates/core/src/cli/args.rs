use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{CliError, OutputFormat, RunConfig};
use crate::dynamics::{DomainMode, Observables, SpeedKind};

#[derive(Debug, Parser)]
#[command(name = "simplexflow", version, about = "Three-species prey-predator dynamics on the 2-simplex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate the operator and write the sampled orbit (CSV or JSON).
    Simulate(CommonArgs),
    /// Iterate and write a JSON report of regime diagnostics.
    Analyze(CommonArgs),
    /// Run a parameter grid in parallel and write one CSV row per run.
    Sweep(CommonArgs),
    /// Compare the Euler scheme with speed f/n against an RK4 reference.
    OdeCompare(CommonArgs),
}

/// Flags shared by every command; any flag given overrides the value from
/// `--config`.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// JSON configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Constant speed in (0, 1].
    #[arg(long, conflicts_with = "f_affine")]
    pub f_const: Option<f64>,
    /// Affine speed α0 + α1·x1 + α2·x2 + α3·x3 as `α0,α1,α2,α3`.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_negative_numbers = true)]
    pub f_affine: Option<Vec<f64>>,
    /// Starting point `x1,x2,x3`.
    #[arg(long, value_delimiter = ',')]
    pub x0: Option<Vec<f64>>,
    #[arg(long)]
    pub steps: Option<u64>,
    #[arg(long)]
    pub stride: Option<u64>,
    /// auto (default), log|on, linear|off.
    #[arg(long, value_parser = parse_domain)]
    pub log_domain: Option<DomainMode>,
    /// Comma-separated subset of phi,sector,region.
    #[arg(long, value_delimiter = ',')]
    pub observables: Option<Vec<String>>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub a_values: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub b_values: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub c_values: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub f_values: Option<Vec<f64>>,
    /// Starting points for sweeps as `x1,x2,x3;x1,x2,x3;…`.
    #[arg(long)]
    pub starts: Option<String>,
    #[arg(long)]
    pub random_starts: Option<usize>,
    #[arg(long)]
    pub max_runs: Option<usize>,
    /// Substep counts for ode-compare.
    #[arg(long, value_delimiter = ',')]
    pub n_list: Option<Vec<u64>>,
    /// Time horizon T for ode-compare.
    #[arg(long, visible_alias = "t")]
    pub horizon: Option<f64>,
}

fn parse_domain(s: &str) -> Result<DomainMode, String> {
    match s {
        "auto" => Ok(DomainMode::Auto),
        "log" | "on" => Ok(DomainMode::Log),
        "linear" | "off" => Ok(DomainMode::Linear),
        _ => Err(format!("expected auto, log or linear, got {s:?}")),
    }
}

fn triple(v: &[f64], what: &str) -> Result<[f64; 3], CliError> {
    <[f64; 3]>::try_from(v).map_err(|_| CliError::Config(format!("{what} needs exactly 3 values, got {}", v.len())))
}

impl CommonArgs {
    /// Loads `--config` (or the defaults) and applies every given flag.
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::from_json_file(path)?,
            None => RunConfig::default(),
        };
        macro_rules! set {
            ($field:expr, $flag:expr) => {
                if let Some(v) = $flag {
                    $field = v;
                }
            };
        }
        if self.a.is_some() {
            cfg.a = self.a;
        }
        if self.b.is_some() {
            cfg.b = self.b;
        }
        if self.c.is_some() {
            cfg.c = self.c;
        }
        if let Some(f) = self.f_const {
            cfg.speed = SpeedKind::Constant(f);
        }
        if let Some(v) = self.f_affine {
            let c = <[f64; 4]>::try_from(v.as_slice())
                .map_err(|_| CliError::Config(format!("--f-affine needs 4 values, got {}", v.len())))?;
            cfg.speed = SpeedKind::Affine(c);
        }
        if let Some(v) = self.x0 {
            cfg.x0 = triple(&v, "--x0")?;
        }
        set!(cfg.steps, self.steps);
        set!(cfg.stride, self.stride);
        set!(cfg.log_domain, self.log_domain);
        if let Some(list) = self.observables {
            let mut obs = Observables::none();
            for name in list {
                match name.trim() {
                    "phi" => obs.phi = true,
                    "sector" => obs.sector = true,
                    "region" => obs.region = true,
                    "" => {}
                    other => return Err(CliError::Config(format!("unknown observable {other:?}"))),
                }
            }
            cfg.observables = obs;
        }
        if self.output.is_some() {
            cfg.output = self.output;
        }
        set!(cfg.format, self.format);
        set!(cfg.seed, self.seed);
        if self.threads.is_some() {
            cfg.threads = self.threads;
        }
        set!(cfg.sweep.a_values, self.a_values);
        set!(cfg.sweep.b_values, self.b_values);
        set!(cfg.sweep.c_values, self.c_values);
        set!(cfg.sweep.f_values, self.f_values);
        if let Some(s) = self.starts {
            cfg.sweep.starts = s
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    let v = p
                        .split(',')
                        .map(|t| t.trim().parse::<f64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| CliError::Config(format!("--starts: {e}")))?;
                    triple(&v, "each start")
                })
                .collect::<Result<_, _>>()?;
        }
        set!(cfg.sweep.random_starts, self.random_starts);
        set!(cfg.sweep.max_runs, self.max_runs);
        set!(cfg.ode.n_list, self.n_list);
        set!(cfg.ode.horizon, self.horizon);
        Ok(cfg)
    }
}
