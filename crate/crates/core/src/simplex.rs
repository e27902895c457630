//! Points of the 2-simplex `S² = {x ∈ R³ : x_i ≥ 0, x₁+x₂+x₃ = 1}`.
//!
//! A [`SimplexPoint`] is stored either as plain frequencies or as their
//! natural logarithms. The log form exists for long runs near the boundary,
//! where coordinates drop below the smallest positive double long before the
//! dynamics are finished with them. Exact zeros are `-inf` in log form.
//!
//! Species and vertices are indexed from 0.

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::numeric::{compensated_sum, ln_or_neg_inf, log_sum_exp};

/// Tolerance on `|Σx − 1|` accepted by [`SimplexPoint::new`] before
/// renormalising.
pub const INPUT_SUM_TOLERANCE: f64 = 1e-9;

/// Default threshold below which a coordinate counts as zero when
/// classifying regions.
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimplexError {
    #[error("coordinate x{} = {value} is negative", index + 1)]
    NegativeCoordinate { index: usize, value: f64 },
    #[error("coordinates sum to {sum}, more than {INPUT_SUM_TOLERANCE} away from 1")]
    SumOutOfTolerance { sum: f64 },
    #[error("coordinate x{} is not finite", index + 1)]
    NonFinite { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexPoint {
    repr: Representation,
    // frequencies for `Linear`, their logarithms for `Log`
    values: [f64; 3],
}

impl SimplexPoint {
    /// Builds a point from frequencies, renormalising by their compensated sum.
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self, SimplexError> {
        Self::from_array([x1, x2, x3])
    }

    pub fn from_array(x: [f64; 3]) -> Result<Self, SimplexError> {
        for (index, &value) in x.iter().enumerate() {
            if !value.is_finite() {
                return Err(SimplexError::NonFinite { index });
            }
            if value < 0.0 {
                return Err(SimplexError::NegativeCoordinate { index, value });
            }
        }
        let sum = compensated_sum(&x);
        if (sum - 1.0).abs() > INPUT_SUM_TOLERANCE {
            return Err(SimplexError::SumOutOfTolerance { sum });
        }
        Ok(Self::normalized_linear(x))
    }

    /// Builds a log-domain point from (unnormalised) log-coordinates.
    /// `-inf` entries are exact zeros; at least one entry must be finite.
    pub fn from_log(ln_x: [f64; 3]) -> Result<Self, SimplexError> {
        for (index, &value) in ln_x.iter().enumerate() {
            if value.is_nan() || value == f64::INFINITY {
                return Err(SimplexError::NonFinite { index });
            }
        }
        let lse = log_sum_exp(&ln_x);
        if lse == f64::NEG_INFINITY {
            return Err(SimplexError::SumOutOfTolerance { sum: 0.0 });
        }
        Ok(Self::normalized_log(ln_x))
    }

    /// Vertex `e_i` (0-based).
    pub fn vertex(i: usize) -> Self {
        assert!(i < 3, "vertex index {i} out of range");
        let mut values = [0.0; 3];
        values[i] = 1.0;
        Self {
            repr: Representation::Linear,
            values,
        }
    }

    pub fn barycenter() -> Self {
        Self::normalized_linear([1.0, 1.0, 1.0])
    }

    /// Divides by the compensated sum. Caller guarantees non-negative finite
    /// entries with a positive sum.
    pub(crate) fn normalized_linear(x: [f64; 3]) -> Self {
        let sum = compensated_sum(&x);
        Self {
            repr: Representation::Linear,
            values: [x[0] / sum, x[1] / sum, x[2] / sum],
        }
    }

    /// Subtracts the log-sum-exp. Caller guarantees at least one finite entry.
    pub(crate) fn normalized_log(ln_x: [f64; 3]) -> Self {
        let lse = log_sum_exp(&ln_x);
        Self {
            repr: Representation::Log,
            values: [ln_x[0] - lse, ln_x[1] - lse, ln_x[2] - lse],
        }
    }

    pub fn representation(&self) -> Representation {
        self.repr
    }

    pub fn is_log(&self) -> bool {
        self.repr == Representation::Log
    }

    /// Frequencies. Log-domain coordinates below ~1e-308 come back as 0.
    pub fn coords(&self) -> [f64; 3] {
        match self.repr {
            Representation::Linear => self.values,
            Representation::Log => self.values.map(f64::exp),
        }
    }

    /// Natural logs of the frequencies, `-inf` for exact zeros.
    pub fn log_coords(&self) -> [f64; 3] {
        match self.repr {
            Representation::Linear => self.values.map(ln_or_neg_inf),
            Representation::Log => self.values,
        }
    }

    pub fn x(&self, i: usize) -> f64 {
        self.coords()[i]
    }

    pub fn to_log(&self) -> Self {
        Self {
            repr: Representation::Log,
            values: self.log_coords(),
        }
    }

    pub fn to_linear(&self) -> Self {
        match self.repr {
            Representation::Linear => *self,
            // exp of normalised logs can drift from 1 by a few ulps
            Representation::Log => Self::normalized_linear(self.coords()),
        }
    }

    pub fn with_representation(&self, repr: Representation) -> Self {
        match repr {
            Representation::Linear => self.to_linear(),
            Representation::Log => self.to_log(),
        }
    }

    /// Smallest coordinate, in log form so it does not underflow.
    pub fn min_log_coord(&self) -> f64 {
        self.log_coords().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Number of exactly-zero coordinates.
    pub fn zero_count(&self) -> usize {
        self.log_coords()
            .iter()
            .filter(|&&l| l == f64::NEG_INFINITY)
            .count()
    }

    pub fn is_interior(&self) -> bool {
        self.zero_count() == 0
    }
}

/// Serialises as the frequency triple `[x1, x2, x3]`.
impl Serialize for SimplexPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

/// Where a point sits on the simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Interior,
    /// The open edge spanned by the two listed vertices (sorted, 0-based).
    Face([usize; 2]),
    Vertex(usize),
}

/// Classifies by zero pattern: a coordinate below `zero_tol` counts as zero.
pub fn classify_region(p: &SimplexPoint, zero_tol: f64) -> Region {
    let x = p.coords();
    if let Some(i) = (0..3).find(|&i| x[i] >= 1.0 - 2.0 * zero_tol) {
        return Region::Vertex(i);
    }
    let ln_tol = zero_tol.ln();
    let ln_x = p.log_coords();
    let zeros: Vec<usize> = (0..3).filter(|&i| ln_x[i] < ln_tol).collect();
    match zeros.as_slice() {
        [] => Region::Interior,
        [k] => {
            let j = (k + 1) % 3;
            let l = (k + 2) % 3;
            Region::Face([j.min(l), j.max(l)])
        }
        // two tiny coordinates put the third within 2*tol of 1; handled above
        // except when rounding lands exactly on the boundary
        _ => {
            let i = (0..3).find(|i| !zeros.contains(i)).unwrap_or(0);
            Region::Vertex(i)
        }
    }
}

/// Max-norm distance.
pub fn distance(p: &SimplexPoint, q: &SimplexPoint) -> f64 {
    let (x, y) = (p.coords(), q.coords());
    (0..3).map(|i| (x[i] - y[i]).abs()).fold(0.0, f64::max)
}

/// Membership in `N_{i,ε} = {x : x_i ≥ 1 − ε}`.
pub fn in_vertex_nbhd(p: &SimplexPoint, i: usize, eps: f64) -> bool {
    p.x(i) >= 1.0 - eps
}
