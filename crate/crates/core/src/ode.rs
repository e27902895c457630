//! The continuous-time limit `ẋ_i = x_i g_i(x) f(x)`.
//!
//! Running the discrete operator with speed `f/n` for `⌈T·n⌉` steps is the
//! explicit Euler scheme for this system with step `1/n`. A fine RK4
//! integration serves as the reference path.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::ln_phi;
use crate::dynamics::{growth_terms, step, DynamicsError, Parameters, SpeedFunction};
use crate::simplex::{distance, SimplexPoint};

/// Largest RK4 step accepted by [`reference_path`].
pub const MAX_REFERENCE_STEP: f64 = 1e-2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OdeError {
    #[error("reference step {h} is outside (0, {MAX_REFERENCE_STEP}]")]
    StepTooLarge { h: f64 },
    #[error("horizon {t} must be finite and non-negative")]
    InvalidHorizon { t: f64 },
    #[error("n must be at least 1")]
    InvalidResolution,
    #[error("need at least two distinct n with positive finite errors")]
    DegenerateFit,
    #[error("reference integration left the simplex near t = {t}")]
    ReferenceUnavailable { t: f64 },
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

/// `v_i(x) = x_i g_i(x) f(x)`. Tangent to the simplex: `Σ v_i = 0`
/// exactly in exact arithmetic.
pub fn vector_field(x: &[f64; 3], params: &Parameters, speed: &SpeedFunction) -> [f64; 3] {
    let g = growth_terms(x, params);
    let f = speed.eval(x);
    std::array::from_fn(|i| x[i] * g[i] * f)
}

/// Iterates of the operator with speed `f/n`, steps `0..=⌈T·n⌉`.
pub fn euler_path(
    x0: SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
    n: u64,
    horizon: f64,
) -> Result<Vec<SimplexPoint>, OdeError> {
    check_horizon(horizon)?;
    if n == 0 {
        return Err(OdeError::InvalidResolution);
    }
    let scaled = speed.scaled(n as f64)?;
    let steps = (horizon * n as f64).ceil() as usize;
    let mut out = Vec::with_capacity(steps + 1);
    let mut x = x0.to_linear();
    out.push(x);
    for _ in 0..steps {
        x = step(&x, params, &scaled)?;
        out.push(x);
    }
    Ok(out)
}

fn check_horizon(t: f64) -> Result<(), OdeError> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(OdeError::InvalidHorizon { t })
    }
}

/// RK4 solution on the grid `t = k·h`, evaluated between nodes by one
/// extra RK4 step from the node below.
#[derive(Debug, Clone)]
pub struct ReferencePath {
    h: f64,
    horizon: f64,
    params: Parameters,
    speed: SpeedFunction,
    nodes: Vec<[f64; 3]>,
}

impl ReferencePath {
    pub fn step_size(&self) -> f64 {
        self.h
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn nodes(&self) -> impl Iterator<Item = (f64, SimplexPoint)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .map(|(k, x)| (k as f64 * self.h, SimplexPoint::normalized_linear(*x)))
    }

    /// State at time `t`, clamped to `[0, horizon]`.
    pub fn at(&self, t: f64) -> SimplexPoint {
        let t = t.clamp(0.0, self.horizon());
        let k = ((t / self.h).floor() as usize).min(self.nodes.len() - 1);
        let dt = (t - k as f64 * self.h).max(0.0);
        let x = if dt > 0.0 {
            rk4_step(&self.nodes[k], &self.params, &self.speed, dt)
        } else {
            self.nodes[k]
        };
        SimplexPoint::normalized_linear(x.map(|v| v.max(0.0)))
    }
}

fn rk4_step(x: &[f64; 3], params: &Parameters, speed: &SpeedFunction, h: f64) -> [f64; 3] {
    let add = |x: &[f64; 3], k: &[f64; 3], s: f64| -> [f64; 3] { std::array::from_fn(|i| x[i] + s * k[i]) };
    let k1 = vector_field(x, params, speed);
    let k2 = vector_field(&add(x, &k1, h / 2.0), params, speed);
    let k3 = vector_field(&add(x, &k2, h / 2.0), params, speed);
    let k4 = vector_field(&add(x, &k3, h), params, speed);
    std::array::from_fn(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Classical RK4 with step `h ≤ 1e-2`, renormalised onto the simplex after
/// every step.
pub fn reference_path(
    x0: SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
    horizon: f64,
    h: f64,
) -> Result<ReferencePath, OdeError> {
    check_horizon(horizon)?;
    if !(h > 0.0 && h <= MAX_REFERENCE_STEP) {
        return Err(OdeError::StepTooLarge { h });
    }
    let steps = (horizon / h).ceil() as usize;
    let mut nodes = Vec::with_capacity(steps + 1);
    let mut x = x0.coords();
    nodes.push(x);
    for k in 0..steps {
        let next = rk4_step(&x, params, speed, h);
        if next.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(OdeError::ReferenceUnavailable { t: (k + 1) as f64 * h });
        }
        x = SimplexPoint::normalized_linear(next).coords();
        nodes.push(x);
    }
    Ok(ReferencePath {
        h,
        horizon,
        params: *params,
        speed: *speed,
        nodes,
    })
}

/// `dφ/dt = φ f Σ λ_i g_i` along the flow. For all-positive coefficients
/// this equals `−φ f F / 2`, for all-negative ones `+φ f F / 2`.
pub fn lyapunov_derivative(p: &SimplexPoint, params: &Parameters, speed: &SpeedFunction) -> f64 {
    let x = p.coords();
    let g = growth_terms(&x, params);
    let l = params.lambdas();
    let phi = ln_phi(p, params).exp();
    phi * speed.eval(&x) * (l[0] * g[0] + l[1] * g[1] + l[2] * g[2])
}

/// `∂φ/∂x_i = λ_i φ / x_i` at an interior point.
pub fn lyapunov_gradient(p: &SimplexPoint, params: &Parameters) -> [f64; 3] {
    let lphi = ln_phi(p, params);
    let lx = p.log_coords();
    let l = params.lambdas();
    std::array::from_fn(|i| l[i] * (lphi - lx[i]).exp())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub horizon: f64,
    pub reference_step: f64,
    /// `(n, endpoint error)` in the order given; the error is the max-norm
    /// distance between the last Euler iterate and the reference at the
    /// same time.
    pub errors: Vec<(u64, f64)>,
    /// Least-squares slope of `ln error` against `ln(1/n)`; `None` when the
    /// errors are too small or too few to fit.
    pub order: Option<f64>,
}

/// Default reference step for [`convergence_study`].
pub const DEFAULT_REFERENCE_STEP: f64 = 1e-3;

/// Errors at or below this are indistinguishable from rounding and make
/// the fit degenerate.
pub const DEGENERATE_ERROR: f64 = 1e-14;

/// Fitted order only; see [`convergence_study`].
pub fn convergence_order(
    x0: SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
    n_list: &[u64],
    horizon: f64,
) -> Result<f64, OdeError> {
    convergence_study(x0, params, speed, n_list, horizon)?
        .order
        .ok_or(OdeError::DegenerateFit)
}

/// Endpoint error of the Euler path against the RK4 reference for each `n`
/// (computed in parallel), and the fitted convergence order.
pub fn convergence_study(
    x0: SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
    n_list: &[u64],
    horizon: f64,
) -> Result<ConvergenceReport, OdeError> {
    check_horizon(horizon)?;
    if n_list.contains(&0) {
        return Err(OdeError::InvalidResolution);
    }
    let t_max = n_list
        .iter()
        .map(|&n| (horizon * n as f64).ceil() / n as f64)
        .fold(horizon, f64::max);
    let reference = reference_path(x0, params, speed, t_max, DEFAULT_REFERENCE_STEP)?;
    let errors = n_list
        .par_iter()
        .map(|&n| {
            let path = euler_path(x0, params, speed, n, horizon)?;
            let last = path.len() - 1;
            Ok((n, distance(&path[last], &reference.at(last as f64 / n as f64))))
        })
        .collect::<Result<Vec<_>, OdeError>>()?;
    let order = fit_slope(&errors).map(|s| -s);
    Ok(ConvergenceReport {
        horizon,
        reference_step: DEFAULT_REFERENCE_STEP,
        errors,
        order,
    })
}

fn fit_slope(errors: &[(u64, f64)]) -> Option<f64> {
    if errors.iter().any(|&(_, e)| !(e > DEGENERATE_ERROR && e.is_finite())) {
        return None;
    }
    let pts: Vec<(f64, f64)> = errors.iter().map(|&(n, e)| ((n as f64).ln(), e.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
