//! All-positive coefficients: φ decreases, the orbit drifts towards the
//! boundary and follows the sectors G1 → G2 → … in cyclic order.
//!
//! `cargo run --release --example non_ergodic_cycling`

use simplexflow::analysis::{estimate_gamma0, ln_phi, sector_cycle_audit, sojourn_stats, CesaroState, Sector};
use simplexflow::dynamics::{iterate, DomainMode, IterateOptions, Observables, Parameters, SpeedFunction};
use simplexflow::SimplexPoint;

pub struct Outcome {
    /// First step at which each sector is entered, in the order visited.
    pub itinerary: Vec<(u64, Sector)>,
    pub violations: usize,
    pub gamma0_exponent: u64,
    pub ln_phi_start: f64,
    pub ln_phi_end: f64,
    pub phi_non_increasing: bool,
    pub sojourns_per_vertex: [usize; 3],
    pub cesaro_final: Vec<[f64; 3]>,
}

pub fn run(steps: u64, f: f64) -> Outcome {
    let params = Parameters::new(1.0, 1.0, 1.0).unwrap();
    let speed = SpeedFunction::constant(f).unwrap();
    let x0 = SimplexPoint::new(0.5, 0.3, 0.2).unwrap();
    let opts = IterateOptions::new(steps)
        .domain(DomainMode::Log)
        .observables(Observables::all());
    let traj = iterate(x0, &params, &speed, &opts).unwrap();

    let mut itinerary = Vec::new();
    let mut cesaro = CesaroState::new(2).unwrap();
    let mut prev_phi = f64::INFINITY;
    let mut phi_non_increasing = true;
    for s in &traj.samples {
        let obs = s.observation.unwrap();
        let sec = obs.sector.unwrap();
        if itinerary.last().map(|&(_, last)| last != sec).unwrap_or(true) {
            itinerary.push((s.step, sec));
        }
        let lp = obs.ln_phi.unwrap();
        phi_non_increasing &= lp <= prev_phi;
        prev_phi = lp;
        cesaro.push(&s.point);
    }
    let audit = sector_cycle_audit(&traj, 0.0).unwrap();
    let gamma = estimate_gamma0(&traj).unwrap();
    let sojourns = sojourn_stats(&traj, 0.05);
    Outcome {
        itinerary,
        violations: audit.violations.len(),
        gamma0_exponent: gamma.k,
        ln_phi_start: ln_phi(&x0, &params),
        ln_phi_end: ln_phi(traj.last().unwrap(), &params),
        phi_non_increasing,
        sojourns_per_vertex: [sojourns[0].len(), sojourns[1].len(), sojourns[2].len()],
        cesaro_final: cesaro.means().to_vec(),
    }
}

fn main() {
    for f in [1.0, 0.1] {
        let o = run(20_000, f);
        println!("f = {f}");
        println!("  sector entries: {:?}", o.itinerary);
        println!("  illegal transitions with gamma = 1: {}", o.violations);
        println!("  estimated gamma0 = 2^-{}", o.gamma0_exponent);
        println!(
            "  ln phi: {:.3} -> {:.3e} (non-increasing: {})",
            o.ln_phi_start, o.ln_phi_end, o.phi_non_increasing
        );
        println!("  sojourns near e1, e2, e3: {:?}", o.sojourns_per_vertex);
        for (k, c) in o.cesaro_final.iter().enumerate() {
            println!("  c_{k} = {c:?}");
        }
    }
}
