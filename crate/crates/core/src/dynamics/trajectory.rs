use serde::{Deserialize, Serialize};

use super::{step, step_log, DynamicsError, Parameters, SpeedFunction};
use crate::analysis::{ln_phi, sector, Sector};
use crate::simplex::{classify_region, Region, SimplexPoint, DEFAULT_ZERO_TOL};

/// Once any coordinate falls below this, `DomainMode::Auto` moves to log form.
pub const AUTO_LOG_THRESHOLD: f64 = 1e-100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainMode {
    Linear,
    Log,
    /// Linear until a coordinate drops below [`AUTO_LOG_THRESHOLD`], log after.
    #[default]
    Auto,
}

/// Per-sample quantities recorded alongside the points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct Observables {
    pub phi: bool,
    pub sector: bool,
    pub region: bool,
}

impl Observables {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        Self {
            phi: true,
            sector: true,
            region: true,
        }
    }

    fn any(&self) -> bool {
        self.phi || self.sector || self.region
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    /// `ln φ(x)`; `-inf` on the boundary.
    pub ln_phi: Option<f64>,
    pub sector: Option<Sector>,
    pub region: Option<Region>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub step: u64,
    pub point: SimplexPoint,
    pub observation: Option<Observation>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterateOptions {
    pub steps: u64,
    pub stride: u64,
    pub domain: DomainMode,
    pub observables: Observables,
    pub zero_tol: f64,
}

impl IterateOptions {
    pub fn new(steps: u64) -> Self {
        Self {
            steps,
            stride: 1,
            domain: DomainMode::Auto,
            observables: Observables::none(),
            zero_tol: DEFAULT_ZERO_TOL,
        }
    }

    pub fn stride(mut self, stride: u64) -> Self {
        self.stride = stride;
        self
    }

    pub fn domain(mut self, domain: DomainMode) -> Self {
        self.domain = domain;
        self
    }

    pub fn observables(mut self, observables: Observables) -> Self {
        self.observables = observables;
        self
    }
}

/// Lazy orbit `x⁽⁰⁾, x⁽¹⁾, …`. Yields the start first. Stops after the first
/// error.
#[derive(Debug, Clone)]
pub struct Orbit {
    current: SimplexPoint,
    params: Parameters,
    speed: SpeedFunction,
    mode: DomainMode,
    index: u64,
    log_from: Option<u64>,
    started: bool,
    failed: bool,
}

impl Orbit {
    pub fn new(start: SimplexPoint, params: Parameters, speed: SpeedFunction, mode: DomainMode) -> Self {
        let (current, log_from) = match mode {
            DomainMode::Linear => (start.to_linear(), None),
            DomainMode::Log => (start.to_log(), Some(0)),
            DomainMode::Auto if start.is_log() || below_threshold(&start) => (start.to_log(), Some(0)),
            DomainMode::Auto => (start, None),
        };
        Self {
            current,
            params,
            speed,
            mode,
            index: 0,
            log_from,
            started: false,
            failed: false,
        }
    }

    /// Step index at which the orbit switched to (or started in) log form.
    pub fn log_domain_from(&self) -> Option<u64> {
        self.log_from
    }

    fn advance(&mut self) -> Result<SimplexPoint, DynamicsError> {
        let next = if self.current.is_log() {
            step_log(&self.current, &self.params, &self.speed)?
        } else {
            step(&self.current, &self.params, &self.speed)?
        };
        self.index += 1;
        self.current = next;
        if self.mode == DomainMode::Auto && !next.is_log() && below_threshold(&next) {
            self.current = next.to_log();
            self.log_from = Some(self.index);
        }
        if self.current.log_coords().iter().any(|v| v.is_nan()) {
            return Err(DynamicsError::NonFinite { step: self.index });
        }
        Ok(self.current)
    }
}

fn below_threshold(p: &SimplexPoint) -> bool {
    p.coords().iter().any(|&v| v > 0.0 && v < AUTO_LOG_THRESHOLD)
}

impl Iterator for Orbit {
    type Item = Result<(u64, SimplexPoint), DynamicsError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Ok((0, self.current)));
        }
        match self.advance() {
            Ok(p) => Some(Ok((self.index, p))),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// A recorded orbit: every `stride`-th iterate from step 0 to `steps`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub start: SimplexPoint,
    pub params: Parameters,
    pub speed: SpeedFunction,
    pub stride: u64,
    pub samples: Vec<Sample>,
    pub log_domain_from: Option<u64>,
}

impl Trajectory {
    /// Wraps externally produced samples (e.g. a constant orbit in tests).
    pub fn from_samples(params: Parameters, speed: SpeedFunction, stride: u64, samples: Vec<Sample>) -> Self {
        let start = samples.first().map(|s| s.point).unwrap_or_else(SimplexPoint::barycenter);
        Self {
            start,
            params,
            speed,
            stride,
            samples,
            log_domain_from: None,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = &SimplexPoint> + '_ {
        self.samples.iter().map(|s| &s.point)
    }

    pub fn last(&self) -> Option<&SimplexPoint> {
        self.samples.last().map(|s| &s.point)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

pub fn observe(p: &SimplexPoint, params: &Parameters, what: Observables, zero_tol: f64) -> Observation {
    Observation {
        ln_phi: what.phi.then(|| ln_phi(p, params)),
        sector: what.sector.then(|| sector(p, params)),
        region: what.region.then(|| classify_region(p, zero_tol)),
    }
}

/// Runs `steps` applications of the operator and records every
/// `stride`-th iterate. Bit-for-bit deterministic.
pub fn iterate(
    start: SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
    opts: &IterateOptions,
) -> Result<Trajectory, DynamicsError> {
    if opts.stride == 0 {
        return Err(DynamicsError::InvalidStride);
    }
    let mut orbit = Orbit::new(start, *params, *speed, opts.domain);
    let capacity = (opts.steps / opts.stride + 1).min(1 << 24) as usize;
    let mut samples = Vec::with_capacity(capacity);
    for item in orbit.by_ref().take(opts.steps as usize + 1) {
        let (n, point) = item?;
        if n % opts.stride == 0 {
            let observation = opts
                .observables
                .any()
                .then(|| observe(&point, params, opts.observables, opts.zero_tol));
            samples.push(Sample {
                step: n,
                point,
                observation,
            });
        }
    }
    Ok(Trajectory {
        start,
        params: *params,
        speed: *speed,
        stride: opts.stride,
        samples,
        log_domain_from: orbit.log_domain_from(),
    })
}
