//! The Zakharevich operator, a classical non-ergodic quadratic map, as a
//! point of comparison for the cubic operator's cycling.
//!
//! `cargo run --example zakharevich`

use simplexflow::analysis::CesaroState;
use simplexflow::dynamics::{zakharevich_step, zakharevich_step_log};
use simplexflow::simplex::in_vertex_nbhd;
use simplexflow::SimplexPoint;

pub struct Outcome {
    /// Steps at which the orbit enters `N_{i,0.05}`, per vertex.
    pub entries: [Vec<u64>; 3],
    pub first_mean: [f64; 3],
}

pub fn run(steps: u64) -> Outcome {
    let mut x = SimplexPoint::new(0.4, 0.35, 0.25).unwrap();
    let mut entries: [Vec<u64>; 3] = Default::default();
    let mut inside = [false; 3];
    let mut mean = CesaroState::new(1).unwrap();
    for n in 0..=steps {
        for v in 0..3 {
            let now = in_vertex_nbhd(&x, v, 0.05);
            if now && !inside[v] {
                entries[v].push(n);
            }
            inside[v] = now;
        }
        mean.push(&x);
        x = if x.min_log_coord() < -200.0 || x.is_log() {
            zakharevich_step_log(&x.to_log())
        } else {
            zakharevich_step(&x)
        };
    }
    Outcome {
        entries,
        first_mean: mean.mean(1),
    }
}

fn main() {
    let o = run(100_000);
    for v in 0..3 {
        println!("e{}: {} entries, first at {:?}", v + 1, o.entries[v].len(), o.entries[v].iter().take(6).collect::<Vec<_>>());
    }
    println!("time average after 1e5 steps: {:?}", o.first_mean);
}
