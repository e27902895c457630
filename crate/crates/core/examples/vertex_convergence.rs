//! Mixed signs: every interior orbit ends at one vertex.
//!
//! `cargo run --example vertex_convergence`

use simplexflow::analysis::classify_regime;
use simplexflow::dynamics::{iterate, IterateOptions, Parameters, SpeedFunction};
use simplexflow::simplex::distance;
use simplexflow::SimplexPoint;

pub struct Outcome {
    pub params: [f64; 3],
    pub predicted: SimplexPoint,
    /// Max-norm distance from each start's final point to the predicted vertex.
    pub distances: Vec<f64>,
    /// `n · (middle coordinate)` at the end; the slower of the two vanishing
    /// coordinates decays like `2/n` at f = 1/2.
    pub decay_constant: f64,
}

pub fn run(steps: u64) -> Vec<Outcome> {
    let speed = SpeedFunction::constant(0.5).unwrap();
    let starts = [[0.5, 0.3, 0.2], [0.1, 0.1, 0.8], [0.2, 0.7, 0.1], [1.0 / 3.0; 3]];
    [[1.0, -1.0, 1.0], [-1.0, 1.0, 1.0], [1.0, 1.0, -1.0]]
        .into_iter()
        .map(|[a, b, c]| {
            let params = Parameters::new(a, b, c).unwrap();
            let predicted = classify_regime(&params).predicted_limit.unwrap();
            let mut distances = Vec::new();
            let mut decay_constant = 0.0;
            for x0 in starts {
                let x0 = SimplexPoint::from_array(x0).unwrap();
                let t = iterate(x0, &params, &speed, &IterateOptions::new(steps).stride(steps)).unwrap();
                let last = t.last().unwrap();
                distances.push(distance(last, &predicted));
                let mut x = last.coords();
                x.sort_by(f64::total_cmp);
                decay_constant = x[1] * steps as f64;
            }
            Outcome {
                params: [a, b, c],
                predicted,
                distances,
                decay_constant,
            }
        })
        .collect()
}

fn main() {
    for o in run(100_000) {
        let worst = o.distances.iter().cloned().fold(0.0, f64::max);
        println!(
            "(a,b,c) = {:?}: predicted {:?}, worst distance after 1e5 steps {worst:.3e}, n*min(x) = {:.3}",
            o.params,
            o.predicted.coords(),
            o.decay_constant
        );
    }
}
