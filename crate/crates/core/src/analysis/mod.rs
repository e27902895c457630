//! Lyapunov function, sectors, Cesàro means and regime diagnostics.

mod cesaro;
mod diagnostics;
mod lyapunov;
mod regime;
mod sectors;
mod sojourn;

use thiserror::Error;

pub use cesaro::{cesaro_coefficients, tail_mass, CesaroState, COEFFICIENT_SIZE_LIMIT, MAX_CESARO_ORDER};
pub use diagnostics::{
    cell_of, detect_convergence, omega_limit_estimate, persistence_report, window_diameter, OmegaEstimate,
    PersistenceReport, SpeciesPersistence, PERSISTENCE_FLOOR,
};
pub use lyapunov::{ln_phi, ln_psi, lyapunov_phi, phi_decay, psi, quadratic_form, PhiDecay};
pub use regime::{classify_regime, Persistence, Regime, RegimeReport};
pub use sectors::{
    estimate_gamma0, sector, sector_cycle_audit, CycleAudit, GammaEstimate, Sector, Transition, SECTOR_TIE_TOL,
};
pub use sojourn::{sojourn_stats, Sojourn};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("Cesàro order {requested} exceeds the maximum {max}")]
    OrderOverflow { requested: usize, max: usize },
    #[error("n = {n} exceeds the coefficient size limit {max}")]
    SizeLimit { n: usize, max: usize },
    #[error("sector audit needs consecutive iterates, trajectory has stride {stride}")]
    StrideTooCoarse { stride: u64 },
    #[error("every sample lies on the boundary, the phi filter selects nothing")]
    DegenerateGammaFilter,
}
