//! Discrete three-species prey-predator dynamics on the 2-simplex.
//!
//! The operator `W` acts on population frequencies `x = (x₁, x₂, x₃)` by
//!
//! ```text
//! x₁' = x₁ (1 + (a x₁x₂ − b x₃²) f(x))
//! x₂' = x₂ (1 + (c x₂x₃ − a x₁²) f(x))
//! x₃' = x₃ (1 + (b x₃x₁ − c x₂²) f(x))
//! ```
//!
//! with `a, b, c ∈ [−1, 1] \ {0}` and a speed function `f: S² → (0, 1]`.
//! The sign pattern of `(a, b, c)` decides the long-run behaviour: mixed
//! signs send interior orbits to a vertex, all-negative coefficients pull
//! them into the interior fixed point `x*`, and all-positive coefficients
//! produce non-ergodic cycling near the boundary.
//!
//! ```
//! use simplexflow::{dynamics::{iterate, IterateOptions, Parameters, SpeedFunction}, SimplexPoint};
//!
//! let params = Parameters::new(-1.0, -1.0, -1.0).unwrap();
//! let speed = SpeedFunction::constant(0.5).unwrap();
//! let x0 = SimplexPoint::new(0.6, 0.3, 0.1).unwrap();
//! let orbit = iterate(x0, &params, &speed, &IterateOptions::new(3000)).unwrap();
//! let last = orbit.last().unwrap();
//! assert!(simplexflow::simplex::distance(last, &params.fixed_point()) < 1e-10);
//! ```

pub mod analysis;
pub mod cli;
pub mod dynamics;
mod numeric;
pub mod ode;
pub mod simplex;

pub use dynamics::{Parameters, SpeedFunction};
pub use simplex::SimplexPoint;
