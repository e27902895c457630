//! Iterated Cesàro means of an orbit and the weights behind them.
//!
//! `cargo run --example cesaro_means`

use simplexflow::analysis::{cesaro_coefficients, tail_mass, CesaroState};
use simplexflow::dynamics::{iterate, IterateOptions, Parameters, SpeedFunction};
use simplexflow::SimplexPoint;

pub struct Outcome {
    /// Max-norm gap between the streaming means and `Σ a_{i,k,n} x⁽ⁱ⁾`.
    pub max_gap: f64,
    pub row_sums: Vec<f64>,
    /// `tail_mass(k, n, 0.1)` for k = 0, 1, 2 and n = 10², 10³, 10⁴.
    pub tail_masses: Vec<[f64; 3]>,
}

pub fn run(n: usize) -> Outcome {
    let params = Parameters::new(0.9, 0.6, 0.8).unwrap();
    let speed = SpeedFunction::constant(1.0).unwrap();
    let x0 = SimplexPoint::new(0.5, 0.3, 0.2).unwrap();
    let t = iterate(x0, &params, &speed, &IterateOptions::new(n as u64)).unwrap();
    let xs: Vec<[f64; 3]> = t.points().map(|p| p.coords()).collect();

    let mut state = CesaroState::new(3).unwrap();
    for x in &xs {
        state.push_coords(*x);
    }
    let mut max_gap: f64 = 0.0;
    let mut row_sums = Vec::new();
    for k in 0..=3 {
        let a = cesaro_coefficients(k, n).unwrap();
        row_sums.push(a.iter().sum());
        for i in 0..3 {
            let explicit: f64 = a.iter().zip(&xs).map(|(w, x)| w * x[i]).sum();
            max_gap = max_gap.max((explicit - state.mean(k)[i]).abs());
        }
    }
    let tail_masses = (0..=2)
        .map(|k| [100, 1000, 10_000].map(|m| tail_mass(k, m, 0.1).unwrap()))
        .collect();
    Outcome {
        max_gap,
        row_sums,
        tail_masses,
    }
}

fn main() {
    let o = run(10_000);
    println!("streaming vs explicit weights, k <= 3: max gap {:.2e}", o.max_gap);
    println!("row sums: {:?}", o.row_sums);
    for (k, m) in o.tail_masses.iter().enumerate() {
        println!("tail mass beyond 10% for k = {k}: n=1e2 {:.4}, 1e3 {:.4}, 1e4 {:.4}", m[0], m[1], m[2]);
    }
}
