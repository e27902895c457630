use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::dynamics::{DomainMode, Observables, Parameters, SpeedFunction, SpeedKind};
use crate::simplex::SimplexPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything a command needs. Loaded from a JSON file, overridden by
/// flags, and echoed verbatim into JSON output headers so a run can be
/// reproduced from its own output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub speed: SpeedKind,
    pub x0: [f64; 3],
    pub steps: u64,
    pub stride: u64,
    pub log_domain: DomainMode,
    pub observables: Observables,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub seed: u64,
    pub threads: Option<usize>,
    pub analysis: AnalysisSpec,
    pub sweep: SweepSpec,
    pub ode: OdeSpec,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            a: None,
            b: None,
            c: None,
            speed: SpeedKind::Constant(1.0),
            x0: [1.0 / 3.0; 3],
            steps: 1000,
            stride: 1,
            log_domain: DomainMode::Auto,
            observables: Observables {
                phi: true,
                sector: true,
                region: false,
            },
            output: None,
            format: OutputFormat::Csv,
            seed: 0,
            threads: None,
            analysis: AnalysisSpec::default(),
            sweep: SweepSpec::default(),
            ode: OdeSpec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalysisSpec {
    /// Max-norm diameter of the final window that counts as converged.
    pub convergence_tol: f64,
    pub convergence_window: usize,
    /// Radius of the vertex neighbourhoods used for sojourns.
    pub vertex_eps: f64,
    /// Highest Cesàro order reported.
    pub cesaro_order: usize,
    pub omega_grid: f64,
    /// Sojourns listed per vertex; the count is always complete.
    pub max_sojourns_listed: usize,
}

impl Default for AnalysisSpec {
    fn default() -> Self {
        Self {
            convergence_tol: 1e-10,
            convergence_window: 100,
            vertex_eps: 0.05,
            cesaro_order: 2,
            omega_grid: 0.05,
            max_sojourns_listed: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    pub a_values: Vec<f64>,
    pub b_values: Vec<f64>,
    pub c_values: Vec<f64>,
    /// Constant speeds.
    pub f_values: Vec<f64>,
    /// Explicit starting points; `x0` is used when this and
    /// `random_starts` are both empty.
    pub starts: Vec<[f64; 3]>,
    /// Additional starts drawn uniformly from the simplex using `seed`.
    pub random_starts: usize,
    pub max_runs: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            a_values: vec![-1.0, 1.0],
            b_values: vec![-1.0, 1.0],
            c_values: vec![-1.0, 1.0],
            f_values: vec![0.5],
            starts: Vec::new(),
            random_starts: 0,
            max_runs: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OdeSpec {
    pub n_list: Vec<u64>,
    pub horizon: f64,
}

impl Default for OdeSpec {
    fn default() -> Self {
        Self {
            n_list: vec![100, 1_000, 10_000, 100_000],
            horizon: 5.0,
        }
    }
}

/// A validated single-run configuration.
#[derive(Debug, Clone, Copy)]
pub struct ResolvedRun {
    pub params: Parameters,
    pub speed: SpeedFunction,
    pub x0: SimplexPoint,
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn params(&self) -> Result<Parameters, CliError> {
        let get = |v: Option<f64>, name: &str| v.ok_or_else(|| CliError::Config(format!("parameter {name} is required")));
        Parameters::new(get(self.a, "a")?, get(self.b, "b")?, get(self.c, "c")?).map_err(CliError::from)
    }

    pub fn resolve(&self) -> Result<ResolvedRun, CliError> {
        if self.stride == 0 {
            return Err(CliError::Config("stride must be at least 1".into()));
        }
        Ok(ResolvedRun {
            params: self.params()?,
            speed: SpeedFunction::from_kind(self.speed)?,
            x0: SimplexPoint::from_array(self.x0).map_err(|e| CliError::Config(format!("x0: {e}")))?,
        })
    }
}
