//! Command-line front end: single runs, analyses, parameter sweeps and
//! continuous-limit comparisons, writing CSV or JSON.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 numeric failure,
//! 4 I/O failure.

mod args;
mod commands;
mod config;
mod output;

use std::ffi::OsString;

use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command, CommonArgs};
pub use commands::{
    analyze_report, cmd_analyze, cmd_ode_compare, cmd_simulate, cmd_sweep, ode_compare_report, simulate_to, sweep_rows,
    sweep_to, worker_count, AnalysisReport, AuditSummary, CesaroSnapshot, PersistenceSummary, RunSummary, SweepRow,
    VertexSojourns, SWEEP_HEADER,
};
pub use config::{AnalysisSpec, OdeSpec, OutputFormat, ResolvedRun, RunConfig, SweepSpec};
pub use output::{format_number, CSV_HEADER};

use crate::dynamics::DynamicsError;

/// Environment variable capping the sweep worker pool.
pub const THREADS_ENV: &str = "SIMPLEXFLOW_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::NonFinite { .. } | DynamicsError::NonPositiveFactor { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("simplexflow: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simulate(common) => cmd_simulate(&common.into_config()?),
        Command::Analyze(common) => cmd_analyze(&common.into_config()?),
        Command::Sweep(common) => cmd_sweep(&common.into_config()?),
        Command::OdeCompare(common) => cmd_ode_compare(&common.into_config()?),
    }
}
