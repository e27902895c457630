//! The prey-predator operator on the 2-simplex, its orbits, and the
//! Zakharevich reference operator.

mod operator;
mod params;
mod speed;
mod trajectory;
mod zakharevich;

use thiserror::Error;

pub use operator::{
    growth_factors, growth_terms, ratios, raw_step, rescaled_step, restrict_to_face, step, step_log,
};
pub(crate) use operator::log_growth_factors;
pub use params::{Parameters, SignPattern};
pub use speed::{SpeedFunction, SpeedKind};
pub use trajectory::{
    iterate, observe, DomainMode, IterateOptions, Observables, Observation, Orbit, Sample, Trajectory,
    AUTO_LOG_THRESHOLD,
};
pub use zakharevich::{zakharevich_map, zakharevich_step, zakharevich_step_log};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("parameter {name} is zero")]
    ZeroParameter { name: &'static str },
    #[error("parameter {name} = {value} is outside [-1, 1]")]
    ParameterOutOfRange { name: &'static str, value: f64 },
    #[error("invalid speed function: {0}")]
    InvalidSpeed(String),
    #[error("growth factor of species {} is {factor}, not positive", species + 1)]
    NonPositiveFactor { species: usize, factor: f64 },
    #[error("point is not on a face of the simplex")]
    NotOnFace,
    #[error("stride must be at least 1")]
    InvalidStride,
    #[error("non-finite coordinate at step {step}")]
    NonFinite { step: u64 },
}
