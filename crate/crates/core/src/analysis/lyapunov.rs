//! The Lyapunov function `φ(x) = x₁^{λ₁} x₂^{λ₂} x₃^{λ₃}`, the one-step
//! multiplier `ψ = φ∘W / φ`, and the quadratic form `F` that bounds `ψ`.
//!
//! Everything is evaluated in log form; `φ` of a point a few hundred steps
//! into a boundary sojourn is far below the double range.

use serde::Serialize;

use crate::dynamics::{growth_factors, growth_terms, log_growth_factors, Parameters, SpeedFunction, Trajectory};
use crate::simplex::SimplexPoint;

/// `ln φ(x) = Σ λ_i ln x_i`; `-inf` on the boundary.
pub fn ln_phi(p: &SimplexPoint, params: &Parameters) -> f64 {
    let lx = p.log_coords();
    let l = params.lambdas();
    if lx.contains(&f64::NEG_INFINITY) {
        return f64::NEG_INFINITY;
    }
    l[0] * lx[0] + l[1] * lx[1] + l[2] * lx[2]
}

/// `φ(x)`. Zero exactly on the boundary, maximal (uniquely) at `x*`.
pub fn lyapunov_phi(p: &SimplexPoint, params: &Parameters) -> f64 {
    ln_phi(p, params).exp()
}

/// `ln ψ(x) = Σ λ_i ln(1 + g_i(x) f(x))`.
pub fn ln_psi(p: &SimplexPoint, params: &Parameters, speed: &SpeedFunction) -> f64 {
    let x = p.coords();
    let f = speed.eval(&x);
    let l = params.lambdas();
    let g = growth_terms(&x, params);
    let needs_log_path = g.iter().any(|gi| gi * f < -0.5);
    let terms: [f64; 3] = if needs_log_path {
        // the log path skips zero coordinates, so only use it for interior points
        match log_growth_factors(p, params, f) {
            Ok(lf) if p.is_interior() => lf,
            _ => growth_factors(x, params.abc(), f).map(f64::ln),
        }
    } else {
        g.map(|gi| (gi * f).ln_1p())
    };
    l[0] * terms[0] + l[1] * terms[1] + l[2] * terms[2]
}

/// `ψ(x)`, so that `φ(W(x)) = φ(x) ψ(x)`. At most 1 when all coefficients
/// are positive; above 1 off `x*` when all are negative and `f` respects
/// [`Parameters::interior_speed_bound`].
pub fn psi(p: &SimplexPoint, params: &Parameters, speed: &SpeedFunction) -> f64 {
    ln_psi(p, params, speed).exp()
}

/// `F = (u−v)² + (u−w)² + (v−w)²` with `u = |a²b|^{1/3} x₁`,
/// `v = |c²a|^{1/3} x₂`, `w = |b²c|^{1/3} x₃`. Vanishes only at `x*`.
pub fn quadratic_form(p: &SimplexPoint, params: &Parameters) -> f64 {
    let [a, b, c] = params.abc();
    let x = p.coords();
    let u = (a * a * b).abs().cbrt() * x[0];
    let v = (c * c * a).abs().cbrt() * x[1];
    let w = (b * b * c).abs().cbrt() * x[2];
    (u - v).powi(2) + (u - w).powi(2) + (v - w).powi(2)
}

/// Summary of how `ln φ` evolved along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiDecay {
    pub ln_phi_start: f64,
    pub ln_phi_end: f64,
    /// `(ln φ_end − ln φ_start) / steps`: the empirical geometric rate.
    pub mean_log_rate: f64,
    /// Largest single increase of `ln φ` between consecutive samples.
    pub max_increase: f64,
    pub steps: u64,
}

pub fn phi_decay(traj: &Trajectory) -> Option<PhiDecay> {
    let first = traj.samples.first()?;
    let last = traj.samples.last()?;
    let params = &traj.params;
    let mut max_increase = f64::NEG_INFINITY;
    let mut prev = ln_phi(&first.point, params);
    for s in &traj.samples[1..] {
        let cur = ln_phi(&s.point, params);
        if prev.is_finite() && cur.is_finite() {
            max_increase = max_increase.max(cur - prev);
        }
        prev = cur;
    }
    let (start, end) = (ln_phi(&first.point, params), ln_phi(&last.point, params));
    let steps = last.step - first.step;
    Some(PhiDecay {
        ln_phi_start: start,
        ln_phi_end: end,
        mean_log_rate: if steps > 0 { (end - start) / steps as f64 } else { 0.0 },
        max_increase,
        steps,
    })
}
