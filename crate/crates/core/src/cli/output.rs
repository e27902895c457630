use std::fs::File;
use std::io::{self, BufWriter, Write};

use super::{CliError, RunConfig};
use crate::simplex::{SimplexPoint, INPUT_SUM_TOLERANCE};

pub const CSV_HEADER: &str = "step,x1,x2,x3,phi,sector";

/// Shortest representation that parses back to the same double.
pub fn format_number(v: f64) -> String {
    if v.is_finite() {
        ryu::Buffer::new().format_finite(v).to_owned()
    } else if v.is_nan() {
        "NaN".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Rejects anything that is not a valid simplex point before it is written.
pub(crate) fn check_point(p: &SimplexPoint, step: u64) -> Result<[f64; 3], CliError> {
    let x = p.coords();
    let sum: f64 = x.iter().sum();
    if x.iter().any(|v| !v.is_finite() || *v < 0.0) || (sum - 1.0).abs() > INPUT_SUM_TOLERANCE {
        return Err(CliError::Numeric(format!("invalid point {x:?} at step {step}")));
    }
    Ok(x)
}

pub(crate) fn open_output(cfg: &RunConfig) -> Result<Box<dyn Write>, CliError> {
    Ok(match &cfg.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Io(format!("creating {}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub(crate) fn to_json_value<T: serde::Serialize>(v: &T) -> Result<serde_json::Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Numeric(e.to_string()))
}
