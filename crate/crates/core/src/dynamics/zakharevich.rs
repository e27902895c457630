//! Zakharevich's quadratic Volterra operator
//!
//! ```text
//! x₁' = x₁² + 2x₁x₂,  x₂' = x₂² + 2x₂x₃,  x₃' = x₃² + 2x₁x₃
//! ```
//!
//! the classical non-ergodic example, kept as a reference dynamic. The
//! images sum to `(x₁+x₂+x₃)²`, so the simplex is preserved exactly.

use num_traits::Num;

use crate::simplex::SimplexPoint;

pub fn zakharevich_map<T: Num + Clone>(x: [T; 3]) -> [T; 3] {
    let two = T::one() + T::one();
    std::array::from_fn(|i| {
        let j = (i + 1) % 3;
        x[i].clone() * (x[i].clone() + two.clone() * x[j].clone())
    })
}

pub fn zakharevich_step(p: &SimplexPoint) -> SimplexPoint {
    SimplexPoint::normalized_linear(zakharevich_map(p.coords()))
}

/// Log-space version: `ln x_i' = ln x_i + ln(x_i + 2 x_{i+1})`.
pub fn zakharevich_step_log(p: &SimplexPoint) -> SimplexPoint {
    let l = p.log_coords();
    let ln2 = std::f64::consts::LN_2;
    let next: [f64; 3] = std::array::from_fn(|i| {
        let j = (i + 1) % 3;
        let (u, v) = (l[i], ln2 + l[j]);
        let m = u.max(v);
        if m == f64::NEG_INFINITY {
            return m;
        }
        l[i] + m + ((u - m).exp() + (v - m).exp()).ln()
    });
    SimplexPoint::normalized_log(next)
}
