//! Sojourns: maximal runs of consecutive samples inside a vertex neighbourhood.

use serde::Serialize;

use super::ln_phi;
use crate::dynamics::Trajectory;
use crate::simplex::in_vertex_nbhd;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sojourn {
    /// 0-based vertex index.
    pub vertex: usize,
    pub first_step: u64,
    pub last_step: u64,
    pub samples: u64,
    /// `ln φ` at entry.
    pub ln_phi_at_entry: f64,
    /// Still inside at the end of the trajectory.
    pub open: bool,
}

impl Sojourn {
    /// Number of steps spent inside, counting both ends.
    pub fn duration(&self) -> u64 {
        self.last_step - self.first_step + 1
    }
}

/// Sojourns in `N_{i,ε}` for each vertex, in order of entry.
pub fn sojourn_stats(traj: &Trajectory, eps: f64) -> [Vec<Sojourn>; 3] {
    let mut out: [Vec<Sojourn>; 3] = Default::default();
    let mut current: [Option<Sojourn>; 3] = [None; 3];
    for s in &traj.samples {
        for v in 0..3 {
            let inside = in_vertex_nbhd(&s.point, v, eps);
            match (&mut current[v], inside) {
                (Some(so), true) => {
                    so.last_step = s.step;
                    so.samples += 1;
                }
                (slot @ None, true) => {
                    *slot = Some(Sojourn {
                        vertex: v,
                        first_step: s.step,
                        last_step: s.step,
                        samples: 1,
                        ln_phi_at_entry: ln_phi(&s.point, &traj.params),
                        open: false,
                    });
                }
                (slot, false) => {
                    if let Some(so) = slot.take() {
                        out[v].push(so);
                    }
                }
            }
        }
    }
    for v in 0..3 {
        if let Some(mut so) = current[v].take() {
            so.open = true;
            out[v].push(so);
        }
    }
    out
}
