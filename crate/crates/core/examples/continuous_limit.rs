//! Speed f/n turns the operator into the Euler scheme of an ODE; its error
//! against an RK4 reference shrinks like 1/n.
//!
//! `cargo run --release --example continuous_limit`

use simplexflow::analysis::lyapunov_phi;
use simplexflow::dynamics::{Parameters, SpeedFunction};
use simplexflow::ode::{convergence_study, lyapunov_derivative, reference_path, ConvergenceReport};
use simplexflow::SimplexPoint;

pub struct Outcome {
    pub report: ConvergenceReport,
    /// `φ` along the reference path at t = 0, 1, …
    pub phi_along_reference: Vec<f64>,
    pub derivative_at_start: f64,
}

pub fn run(n_list: &[u64], horizon: f64) -> Outcome {
    let params = Parameters::new(1.0, 1.0, 1.0).unwrap();
    let speed = SpeedFunction::constant(1.0).unwrap();
    let x0 = SimplexPoint::new(0.5, 0.3, 0.2).unwrap();
    let report = convergence_study(x0, &params, &speed, n_list, horizon).unwrap();
    let reference = reference_path(x0, &params, &speed, horizon, 1e-3).unwrap();
    let phi_along_reference = (0..=horizon.floor() as u32)
        .map(|t| lyapunov_phi(&reference.at(t as f64), &params))
        .collect();
    Outcome {
        report,
        phi_along_reference,
        derivative_at_start: lyapunov_derivative(&x0, &params, &speed),
    }
}

fn main() {
    let o = run(&[100, 1_000, 10_000, 100_000], 5.0);
    for (n, e) in &o.report.errors {
        println!("n = {n:>6}: endpoint error {e:.3e}");
    }
    println!("fitted order: {:?}", o.report.order);
    println!("dphi/dt at the start: {:.3e}", o.derivative_at_start);
    println!("phi at t = 0, 1, ...: {:?}", o.phi_along_reference);
}
