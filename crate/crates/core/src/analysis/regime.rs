use std::fmt;

use serde::Serialize;

use crate::dynamics::{Parameters, SignPattern};
use crate::simplex::SimplexPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Interior orbits converge to one vertex.
    VertexConvergence,
    /// Interior orbits accumulate on the boundary cycle `e1 → e2 → e3 → e1`
    /// without converging, and their time averages do not settle.
    NonErgodicCycling,
    /// Interior orbits converge to the interior fixed point `x*`.
    InteriorConvergence,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::VertexConvergence => "vertex_convergence",
            Regime::NonErgodicCycling => "non_ergodic_cycling",
            Regime::InteriorConvergence => "interior_convergence",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Persistence {
    /// Some species dies out.
    None,
    /// `limsup x_i > 0` for every species, but not `liminf`.
    Weak,
    /// `liminf x_i > 0` for every species.
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeReport {
    pub regime: Regime,
    /// Limit of interior orbits: a vertex, `x*`, or `None` when there is none.
    pub predicted_limit: Option<SimplexPoint>,
    pub persistence: Persistence,
    pub basis: &'static str,
}

/// Asymptotic regime from the sign pattern of `(a, b, c)`; valid for any
/// speed function within range and any interior starting point.
pub fn classify_regime(params: &Parameters) -> RegimeReport {
    let [a, b, c] = params.abc();
    match params.sign_pattern() {
        SignPattern::Mixed => {
            let vertex = if a > 0.0 && b < 0.0 {
                0
            } else if c > 0.0 && a < 0.0 {
                1
            } else {
                2
            };
            RegimeReport {
                regime: Regime::VertexConvergence,
                predicted_limit: Some(SimplexPoint::vertex(vertex)),
                persistence: Persistence::None,
                basis: "mixed signs: one species is monotone along interior orbits",
            }
        }
        SignPattern::AllPositive => RegimeReport {
            regime: Regime::NonErgodicCycling,
            predicted_limit: None,
            persistence: Persistence::Weak,
            basis: "all positive: phi strictly decreases off x*, sectors are visited cyclically",
        },
        SignPattern::AllNegative => RegimeReport {
            regime: Regime::InteriorConvergence,
            predicted_limit: Some(params.fixed_point()),
            persistence: Persistence::Strong,
            basis: "all negative: phi strictly increases off x*",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(a: f64, b: f64, c: f64) -> RegimeReport {
        classify_regime(&Parameters::new(a, b, c).unwrap())
    }

    #[test]
    fn mixed_signs_pick_a_vertex() {
        let cases = [
            ((1.0, -1.0, 1.0), 0),
            ((0.5, -0.2, -0.7), 0),
            ((-1.0, 1.0, 1.0), 1),
            ((-0.3, -0.4, 0.9), 1),
            ((1.0, 1.0, -1.0), 2),
            ((0.6, 0.2, -0.1), 2),
        ];
        for ((a, b, c), v) in cases {
            let r = report(a, b, c);
            assert_eq!(r.regime, Regime::VertexConvergence);
            assert_eq!(r.persistence, Persistence::None);
            assert_eq!(r.predicted_limit, Some(SimplexPoint::vertex(v)), "({a},{b},{c})");
        }
    }

    #[test]
    fn uniform_signs() {
        let r = report(1.0, 1.0, 1.0);
        assert_eq!((r.regime, r.persistence, r.predicted_limit), (Regime::NonErgodicCycling, Persistence::Weak, None));
        let p = Parameters::new(-1.0, -1.0, -1.0).unwrap();
        let r = classify_regime(&p);
        assert_eq!(r.regime, Regime::InteriorConvergence);
        assert_eq!(r.persistence, Persistence::Strong);
        assert_eq!(r.predicted_limit, Some(p.fixed_point()));
    }
}
