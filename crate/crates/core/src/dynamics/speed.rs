use serde::{Deserialize, Serialize};

use super::DynamicsError;

/// The local speed `f : S² → (0, 1]`.
///
/// Only two families are built in. Any other speed must be continuous on the
/// closed simplex with values in `(0, 1]`; the operator only ever calls
/// [`SpeedFunction::eval`] on frequencies that sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpeedKind {
    Constant(f64),
    /// `α₀ + α₁x₁ + α₂x₂ + α₃x₃`
    Affine([f64; 4]),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SpeedFunction(SpeedKind);

impl SpeedFunction {
    pub fn constant(value: f64) -> Result<Self, DynamicsError> {
        if !(value > 0.0 && value <= 1.0) {
            return Err(DynamicsError::InvalidSpeed(format!(
                "constant speed {value} is outside (0, 1]"
            )));
        }
        Ok(Self(SpeedKind::Constant(value)))
    }

    /// Affine speed. An affine map on the simplex takes its extremes at the
    /// vertices, so checking `α₀ + α_i ∈ (0, 1]` certifies the whole range.
    pub fn affine(coeffs: [f64; 4]) -> Result<Self, DynamicsError> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(DynamicsError::InvalidSpeed(
                "affine coefficients must be finite".into(),
            ));
        }
        for i in 1..4 {
            let v = coeffs[0] + coeffs[i];
            if !(v > 0.0 && v <= 1.0) {
                return Err(DynamicsError::InvalidSpeed(format!(
                    "affine speed takes value {v} at vertex {i}, outside (0, 1]"
                )));
            }
        }
        Ok(Self(SpeedKind::Affine(coeffs)))
    }

    pub fn from_kind(kind: SpeedKind) -> Result<Self, DynamicsError> {
        match kind {
            SpeedKind::Constant(v) => Self::constant(v),
            SpeedKind::Affine(c) => Self::affine(c),
        }
    }

    pub fn kind(&self) -> SpeedKind {
        self.0
    }

    #[inline]
    pub fn eval(&self, x: &[f64; 3]) -> f64 {
        match self.0 {
            SpeedKind::Constant(v) => v,
            SpeedKind::Affine([a0, a1, a2, a3]) => a0 + a1 * x[0] + a2 * x[1] + a3 * x[2],
        }
    }

    /// `f / divisor` for `divisor ≥ 1`; the Euler scheme with `n` substeps
    /// per unit time is the operator run at speed `f / n`.
    pub fn scaled(&self, divisor: f64) -> Result<Self, DynamicsError> {
        if !(divisor >= 1.0 && divisor.is_finite()) {
            return Err(DynamicsError::InvalidSpeed(format!(
                "speed divisor {divisor} must be a finite value >= 1"
            )));
        }
        Ok(Self(match self.0 {
            SpeedKind::Constant(v) => SpeedKind::Constant(v / divisor),
            SpeedKind::Affine(c) => SpeedKind::Affine(c.map(|ci| ci / divisor)),
        }))
    }

    /// Largest value over the simplex.
    pub fn max_value(&self) -> f64 {
        match self.0 {
            SpeedKind::Constant(v) => v,
            SpeedKind::Affine(c) => (1..4).map(|i| c[0] + c[i]).fold(f64::MIN, f64::max),
        }
    }
}
