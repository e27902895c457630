//! Finite-horizon evidence for convergence, persistence and the ω-limit set.

use std::collections::BTreeSet;

use serde::Serialize;

use super::Persistence;
use crate::dynamics::Trajectory;
use crate::simplex::SimplexPoint;

/// Returns the last point once the final `window` samples fit in a max-norm
/// ball of diameter `tol`.
pub fn detect_convergence(traj: &Trajectory, tol: f64, window: usize) -> Option<SimplexPoint> {
    if window < 2 || traj.samples.len() < window {
        return None;
    }
    let tail = &traj.samples[traj.samples.len() - window..];
    (window_diameter(tail.iter().map(|s| &s.point)) <= tol).then(|| tail[window - 1].point)
}

/// `max_i (max x_i − min x_i)` over the given points.
pub fn window_diameter<'a>(points: impl IntoIterator<Item = &'a SimplexPoint>) -> f64 {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in points {
        let x = p.coords();
        for i in 0..3 {
            lo[i] = lo[i].min(x[i]);
            hi[i] = hi[i].max(x[i]);
        }
    }
    (0..3).map(|i| hi[i] - lo[i]).fold(0.0, f64::max)
}

/// Below this a species counts as absent in [`PersistenceReport::hint`].
pub const PERSISTENCE_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeciesPersistence {
    pub global_min: f64,
    /// `ln` of the global minimum, meaningful where `global_min` underflows.
    pub global_min_ln: f64,
    /// Minimum over the final window: a proxy for `liminf`.
    pub window_min: f64,
    pub window_min_ln: f64,
    /// Maximum over the final window: a proxy for `limsup`.
    pub window_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PersistenceReport {
    /// Samples in the final window (the last tenth of the trajectory).
    pub window: usize,
    pub species: [SpeciesPersistence; 3],
}

impl PersistenceReport {
    /// What the finite window suggests; not a proof of anything.
    pub fn hint(&self) -> Persistence {
        if self.species.iter().all(|s| s.window_min >= PERSISTENCE_FLOOR) {
            Persistence::Strong
        } else if self.species.iter().all(|s| s.window_max >= PERSISTENCE_FLOOR) {
            Persistence::Weak
        } else {
            Persistence::None
        }
    }
}

pub fn persistence_report(traj: &Trajectory) -> Option<PersistenceReport> {
    let n = traj.samples.len();
    if n == 0 {
        return None;
    }
    let window = (n / 10).max(1);
    let species = std::array::from_fn(|i| {
        let mut s = SpeciesPersistence {
            global_min: f64::INFINITY,
            global_min_ln: f64::INFINITY,
            window_min: f64::INFINITY,
            window_min_ln: f64::INFINITY,
            window_max: f64::NEG_INFINITY,
        };
        for (k, sample) in traj.samples.iter().enumerate() {
            let ln_x = sample.point.log_coords()[i];
            let x = sample.point.x(i);
            s.global_min_ln = s.global_min_ln.min(ln_x);
            s.global_min = s.global_min.min(x);
            if k >= n - window {
                s.window_min_ln = s.window_min_ln.min(ln_x);
                s.window_min = s.window_min.min(x);
                s.window_max = s.window_max.max(x);
            }
        }
        s
    });
    Some(PersistenceReport { window, species })
}

/// Grid cells of side `grid` visited after `burn_in`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaEstimate {
    pub grid: f64,
    pub burn_in: u64,
    /// `[i, j, k]` covers `x₁ ∈ [i·grid, (i+1)·grid)` and likewise for
    /// `x₂, x₃`; the top cell is closed at 1.
    pub cells: BTreeSet<[u32; 3]>,
}

impl OmegaEstimate {
    pub fn cells_per_axis(&self) -> u32 {
        (1.0 / self.grid).ceil() as u32
    }

    /// Whether some visited cell reaches into `N_{v,ε}`.
    pub fn touches_vertex_nbhd(&self, v: usize, eps: f64) -> bool {
        self.cells
            .iter()
            .any(|c| (c[v] as f64 + 1.0) * self.grid > 1.0 - eps)
    }
}

pub fn cell_of(p: &SimplexPoint, grid: f64) -> [u32; 3] {
    let m = (1.0 / grid).ceil() as u32;
    p.coords().map(|x| ((x / grid).floor() as u32).min(m - 1))
}

/// Cells hit by samples at steps `≥ burn_in`; `grid` must lie in `(0, 1]`.
pub fn omega_limit_estimate(traj: &Trajectory, burn_in: u64, grid: f64) -> OmegaEstimate {
    let grid = if grid > 0.0 && grid <= 1.0 { grid } else { 1.0 };
    let cells = traj
        .samples
        .iter()
        .filter(|s| s.step >= burn_in)
        .map(|s| cell_of(&s.point, grid))
        .collect();
    OmegaEstimate { grid, burn_in, cells }
}
