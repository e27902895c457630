//! All-negative coefficients with a small enough speed: φ increases and
//! orbits converge to the interior fixed point x*.
//!
//! `cargo run --example interior_convergence`

use simplexflow::analysis::{detect_convergence, psi, quadratic_form};
use simplexflow::dynamics::{iterate, IterateOptions, Parameters, SpeedFunction};
use simplexflow::simplex::distance;
use simplexflow::SimplexPoint;

pub struct Outcome {
    pub fixed_point: [f64; 3],
    pub speed_bound: f64,
    /// Step at which the last window of 100 iterates fits in 1e-10, per start.
    pub settled_by: Vec<Option<u64>>,
    pub final_distance: f64,
    /// `(F(x), ψ(x))` along the first start's orbit.
    pub psi_samples: Vec<(f64, f64)>,
}

pub fn run(steps: u64) -> Outcome {
    let params = Parameters::new(-1.0, -1.0, -0.125).unwrap();
    let speed = SpeedFunction::constant(0.3).unwrap();
    let xs = params.fixed_point();
    let mut settled_by = Vec::new();
    let mut final_distance: f64 = 0.0;
    let mut psi_samples = Vec::new();
    for (i, x0) in [[0.6, 0.3, 0.1], [0.05, 0.05, 0.9], [0.3, 0.3, 0.4]].into_iter().enumerate() {
        let x0 = SimplexPoint::from_array(x0).unwrap();
        let t = iterate(x0, &params, &speed, &IterateOptions::new(steps)).unwrap();
        settled_by.push(detect_convergence(&t, 1e-10, 100).map(|_| first_settled(&t)));
        final_distance = final_distance.max(distance(t.last().unwrap(), &xs));
        if i == 0 {
            psi_samples = t
                .points()
                .step_by((steps as usize / 8).max(1))
                .map(|p| (quadratic_form(p, &params), psi(p, &params, &speed)))
                .collect();
        }
    }
    Outcome {
        fixed_point: xs.coords(),
        speed_bound: params.interior_speed_bound(),
        settled_by,
        final_distance,
        psi_samples,
    }
}

fn first_settled(t: &simplexflow::dynamics::Trajectory) -> u64 {
    let pts: Vec<_> = t.points().copied().collect();
    let last = *pts.last().unwrap();
    let k = pts.iter().rposition(|p| distance(p, &last) > 1e-10).map_or(0, |k| k + 1);
    t.samples[k].step
}

fn main() {
    let o = run(20_000);
    println!("x* = {:?} (expected 1/7, 4/7, 2/7)", o.fixed_point);
    println!("speed bound 1.25·min λ_i/λ_j = {}", o.speed_bound);
    println!("settled within 1e-10 at steps {:?}", o.settled_by);
    println!("largest final distance to x*: {:.2e}", o.final_distance);
    for (f, p) in o.psi_samples {
        println!("  F = {f:.3e}  psi - 1 = {:.3e}", p - 1.0);
    }
}
