//! A parallel sweep over the sign grid {−1, 1}³ with seeded random starts.
//! Rows come out in grid order whatever the thread count.
//!
//! `cargo run --release --example parameter_sweep`

use simplexflow::cli::{sweep_to, RunConfig};

pub fn run(threads: usize, steps: u64) -> Vec<u8> {
    let mut cfg = RunConfig {
        steps,
        seed: 7,
        threads: Some(threads),
        ..RunConfig::default()
    };
    cfg.sweep.a_values = vec![-1.0, 1.0];
    cfg.sweep.b_values = vec![-1.0, 1.0];
    cfg.sweep.c_values = vec![-1.0, 1.0];
    cfg.sweep.f_values = vec![0.5];
    cfg.sweep.random_starts = 4;
    let mut out = Vec::new();
    sweep_to(&cfg, &mut out).unwrap();
    out
}

fn main() {
    let one = run(1, 20_000);
    let many = run(8, 20_000);
    print!("{}", String::from_utf8_lossy(&one));
    println!("identical with 1 and 8 threads: {}", one == many);
}
