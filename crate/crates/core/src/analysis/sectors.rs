//! The six sectors cut out by the orderings of `x_i / λ_i`, and the audit
//! of the cyclic order `G1 → G2 → … → G6 → G1` along orbits.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ln_phi, AnalysisError};
use crate::dynamics::{Parameters, Trajectory};
use crate::simplex::SimplexPoint;

/// Two log-ratios closer than this count as equal, so that `x*` itself
/// lands in `G1` despite rounding in its coordinates.
pub const SECTOR_TIE_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sector {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl Sector {
    pub const ALL: [Sector; 6] = [Sector::G1, Sector::G2, Sector::G3, Sector::G4, Sector::G5, Sector::G6];

    /// 1-based label.
    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_index(i: u8) -> Option<Self> {
        Self::ALL.get((i as usize).checked_sub(1)?).copied()
    }

    /// The cyclic successor; `G6.next() == G1`.
    pub fn next(self) -> Self {
        Self::ALL[(self as usize + 1) % 6]
    }

    /// Whether `self → to` is allowed along an orbit in the cycling regime.
    pub fn is_legal_transition(self, to: Sector) -> bool {
        to == self || to == self.next()
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index())
    }
}

/// Orderings in priority order, as (largest, middle, smallest) species.
const ORDERINGS: [(Sector, [usize; 3]); 6] = [
    (Sector::G1, [0, 1, 2]),
    (Sector::G2, [0, 2, 1]),
    (Sector::G3, [2, 0, 1]),
    (Sector::G4, [2, 1, 0]),
    (Sector::G5, [1, 2, 0]),
    (Sector::G6, [1, 0, 2]),
];

/// Sector of `p`. Ties go to the first sector in the order `G1, …, G6`.
pub fn sector(p: &SimplexPoint, params: &Parameters) -> Sector {
    let lx = p.log_coords();
    let ll = params.lambdas().map(f64::ln);
    let r: [f64; 3] = std::array::from_fn(|i| lx[i] - ll[i]);
    let geq = |i: usize, j: usize| r[i] >= r[j] || (r[j] - r[i]) <= SECTOR_TIE_TOL;
    for (s, [hi, mid, lo]) in ORDERINGS {
        if geq(hi, mid) && geq(mid, lo) {
            return s;
        }
    }
    unreachable!("some ordering always holds")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Transition {
    /// Step of the source sample.
    pub step: u64,
    pub from: Sector,
    pub to: Sector,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleAudit {
    pub ln_gamma: f64,
    /// Consecutive pairs whose source satisfies `φ ≤ γ`.
    pub audited_transitions: u64,
    /// Audited pairs that change sector.
    pub changes: Vec<Transition>,
    /// Audited pairs other than `G_i → G_i` or `G_i → G_{i+1}`.
    pub violations: Vec<Transition>,
    /// Samples with `φ ≤ γ`, per sector `G1..G6`.
    pub visits: [u64; 6],
    /// All samples, per sector.
    pub total_visits: [u64; 6],
}

impl CycleAudit {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sector_of(traj: &Trajectory, i: usize) -> Sector {
    let s = &traj.samples[i];
    s.observation
        .and_then(|o| o.sector)
        .unwrap_or_else(|| sector(&s.point, &traj.params))
}

fn ln_phi_of(traj: &Trajectory, i: usize) -> f64 {
    let s = &traj.samples[i];
    s.observation
        .and_then(|o| o.ln_phi)
        .unwrap_or_else(|| ln_phi(&s.point, &traj.params))
}

/// Checks the cyclic order on samples with `ln φ ≤ ln_gamma`.
///
/// `γ` is passed as a logarithm because useful thresholds sit far below
/// the smallest double. The trajectory must be recorded with stride 1.
pub fn sector_cycle_audit(traj: &Trajectory, ln_gamma: f64) -> Result<CycleAudit, AnalysisError> {
    if traj.samples.windows(2).any(|w| w[1].step != w[0].step + 1) {
        return Err(AnalysisError::StrideTooCoarse { stride: traj.stride });
    }
    let n = traj.samples.len();
    let sectors: Vec<Sector> = (0..n).map(|i| sector_of(traj, i)).collect();
    let ln_phis: Vec<f64> = (0..n).map(|i| ln_phi_of(traj, i)).collect();
    if n > 0 && ln_phis.iter().all(|&v| v == f64::NEG_INFINITY) {
        return Err(AnalysisError::DegenerateGammaFilter);
    }
    let mut audit = CycleAudit {
        ln_gamma,
        audited_transitions: 0,
        changes: Vec::new(),
        violations: Vec::new(),
        visits: [0; 6],
        total_visits: [0; 6],
    };
    for i in 0..n {
        let s = sectors[i];
        audit.total_visits[s as usize] += 1;
        if ln_phis[i] > ln_gamma {
            continue;
        }
        audit.visits[s as usize] += 1;
        if i + 1 < n {
            audit.audited_transitions += 1;
            let t = Transition {
                step: traj.samples[i].step,
                from: s,
                to: sectors[i + 1],
            };
            if t.from != t.to {
                audit.changes.push(t);
            }
            if !t.from.is_legal_transition(t.to) {
                audit.violations.push(t);
            }
        }
    }
    Ok(audit)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaEstimate {
    /// `γ̂₀ = 2^{-k}`.
    pub k: u64,
    pub ln_gamma: f64,
    pub audit: CycleAudit,
}

/// Largest dyadic `γ = 2^{-k}` whose audit shows no violations.
///
/// Violations can only disappear as `γ` shrinks, so the smallest clean `k`
/// is located by doubling and then bisection.
pub fn estimate_gamma0(traj: &Trajectory) -> Result<GammaEstimate, AnalysisError> {
    let ln2 = std::f64::consts::LN_2;
    let audit_at = |k: u64| sector_cycle_audit(traj, -(k as f64) * ln2);
    let first = audit_at(0)?;
    if first.is_clean() {
        return Ok(GammaEstimate {
            k: 0,
            ln_gamma: 0.0,
            audit: first,
        });
    }
    let (mut bad, mut good) = (0u64, 1u64);
    let mut good_audit = loop {
        let a = audit_at(good)?;
        if a.is_clean() {
            break a;
        }
        bad = good;
        good = good.checked_mul(2).ok_or(AnalysisError::DegenerateGammaFilter)?;
    };
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        let a = audit_at(mid)?;
        if a.is_clean() {
            good = mid;
            good_audit = a;
        } else {
            bad = mid;
        }
    }
    Ok(GammaEstimate {
        k: good,
        ln_gamma: -(good as f64) * ln2,
        audit: good_audit,
    })
}
