use serde::Serialize;

use super::DynamicsError;
use crate::numeric::compensated_sum;
use crate::simplex::SimplexPoint;

/// Sign structure of `(a, b, c)`, which alone decides the long-run regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignPattern {
    AllPositive,
    AllNegative,
    Mixed,
}

/// Interaction coefficients `a, b, c ∈ [−1, 1] \ {0}` with the derived
/// weights `λ₁ = |bc²|^{1/3}`, `λ₂ = |ab²|^{1/3}`, `λ₃ = |a²c|^{1/3}` and
/// the point `x* = λ / (λ₁ + λ₂ + λ₃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parameters {
    a: f64,
    b: f64,
    c: f64,
    lambdas: [f64; 3],
    fixed_point: SimplexPoint,
}

impl Parameters {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, DynamicsError> {
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if !value.is_finite() || !(-1.0..=1.0).contains(&value) {
                return Err(DynamicsError::ParameterOutOfRange { name, value });
            }
            if value == 0.0 {
                return Err(DynamicsError::ZeroParameter { name });
            }
        }
        let lambdas = [
            (b * c * c).abs().cbrt(),
            (a * b * b).abs().cbrt(),
            (a * a * c).abs().cbrt(),
        ];
        let total = compensated_sum(&lambdas);
        let fixed_point =
            SimplexPoint::normalized_linear([lambdas[0] / total, lambdas[1] / total, lambdas[2] / total]);
        Ok(Self {
            a,
            b,
            c,
            lambdas,
            fixed_point,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn abc(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn lambdas(&self) -> [f64; 3] {
        self.lambdas
    }

    /// `x*`. Fixed by the operator whenever the signs agree.
    pub fn fixed_point(&self) -> SimplexPoint {
        self.fixed_point
    }

    pub fn sign_pattern(&self) -> SignPattern {
        if self.a > 0.0 && self.b > 0.0 && self.c > 0.0 {
            SignPattern::AllPositive
        } else if self.a < 0.0 && self.b < 0.0 && self.c < 0.0 {
            SignPattern::AllNegative
        } else {
            SignPattern::Mixed
        }
    }

    /// `min(1, 5/4 · min_{i,j} λ_i/λ_j)`: constant speeds at or below this
    /// value make `φ` strictly increase off `x*` when all coefficients are
    /// negative.
    pub fn interior_speed_bound(&self) -> f64 {
        let max = self.lambdas.iter().copied().fold(0.0, f64::max);
        let min = self.lambdas.iter().copied().fold(f64::INFINITY, f64::min);
        (1.25 * min / max).min(1.0)
    }

    /// Coefficient of the cross term `x_i x_{i+1}` in species `i`'s growth
    /// rate: `(a, c, b)`.
    pub(crate) fn cross(&self) -> [f64; 3] {
        [self.a, self.c, self.b]
    }

    /// Coefficient of the squared term `x_{i+2}²` in species `i`'s growth
    /// rate: `(b, a, c)`.
    pub(crate) fn square(&self) -> [f64; 3] {
        [self.b, self.a, self.c]
    }
}
