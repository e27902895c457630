//! One generation of the three-species operator
//!
//! ```text
//! x₁' = x₁ (1 + (a x₁x₂ − b x₃²) f(x))
//! x₂' = x₂ (1 + (c x₂x₃ − a x₁²) f(x))
//! x₃' = x₃ (1 + (b x₃x₁ − c x₂²) f(x))
//! ```
//!
//! Species `i` grows through the cross term `x_i x_{i+1}` and is eaten
//! through the squared term `x_{i+2}²` (indices mod 3).
//!
//! The factors are never evaluated as `1 + g_i f` literally: with `|a| f = 1`
//! that expression cancels to exactly zero near a vertex while the true
//! factor is of the size of the distance to the vertex. Writing
//! `x_{i+2} = 1 − s` with `s = x_i + x_{i+1}` gives
//!
//! ```text
//! 1 + g_i f = (1 − q f) + q f · s (2 − s) + p f · x_i x_{i+1}
//! ```
//!
//! (`q` the squared-term coefficient, `p` the cross-term one), an identity on
//! the simplex with no cancellation left in it.

use num_traits::Num;

use super::{DynamicsError, Parameters, SpeedFunction};
use crate::numeric::ln_or_neg_inf;
use crate::simplex::SimplexPoint;

/// Below this, a linear-scale factor is recomputed in log space.
const TINY_FACTOR: f64 = 1e-200;

/// `g_i(x)`, the bracketed growth rates, in their direct form.
pub fn growth_terms(x: &[f64; 3], params: &Parameters) -> [f64; 3] {
    let [a, b, c] = params.abc();
    let [x1, x2, x3] = *x;
    [
        a * x1 * x2 - b * x3 * x3,
        c * x2 * x3 - a * x1 * x1,
        b * x3 * x1 - c * x2 * x2,
    ]
}

/// The multiplicative factors `1 + g_i f` in the cancellation-free form,
/// over any numeric type. Equal to the direct form whenever `Σx = 1`.
pub fn growth_factors<T: Num + Clone>(x: [T; 3], abc: [T; 3], f: T) -> [T; 3] {
    let [a, b, c] = abc;
    let cross = [a.clone(), c.clone(), b.clone()];
    let square = [b, a, c];
    let one = T::one;
    let two = one() + one();
    std::array::from_fn(|i| {
        let j = (i + 1) % 3;
        let s = x[i].clone() + x[j].clone();
        let qf = square[i].clone() * f.clone();
        (one() - qf.clone())
            + qf * s.clone() * (two.clone() - s)
            + cross[i].clone() * f.clone() * x[i].clone() * x[j].clone()
    })
}

fn log_add_exp(u: f64, v: f64) -> f64 {
    let m = u.max(v);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + ((u - m).exp() + (v - m).exp()).ln()
}

/// `ln(1 + g_i f)` for every species, accurate even when the factor itself
/// would underflow (a point within ~1e-300 of a vertex with `|q| f = 1`).
pub(crate) fn log_growth_factors(
    p: &SimplexPoint,
    params: &Parameters,
    f: f64,
) -> Result<[f64; 3], DynamicsError> {
    let x = p.coords();
    let lx = p.log_coords();
    let linear = growth_factors(x, params.abc(), f);
    let (cross, square) = (params.cross(), params.square());
    let mut out = [0.0; 3];
    for i in 0..3 {
        if lx[i] == f64::NEG_INFINITY {
            continue;
        }
        let j = (i + 1) % 3;
        let lin = linear[i];
        out[i] = if lin > TINY_FACTOR {
            lin.ln()
        } else {
            let q = square[i] * f;
            let s = x[i] + x[j];
            let ln_s = log_add_exp(lx[i], lx[j]);
            // x_i x_j / s ≤ s / 4, so the bracket is dominated by q (2 − s) > 0
            let ratio = (lx[i] + lx[j] - ln_s).exp();
            let bracket = q * (2.0 - s) + cross[i] * f * ratio;
            log_add_exp(ln_or_neg_inf((1.0 - q).max(0.0)), ln_s + bracket.ln())
        };
        if out[i].is_nan() || out[i] == f64::NEG_INFINITY {
            return Err(DynamicsError::NonPositiveFactor {
                species: i,
                factor: lin,
            });
        }
    }
    Ok(out)
}

/// `(x_i (1 + g_i f))_i` before renormalisation. Exact zeros stay zero.
pub fn raw_step(
    p: &SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
) -> Result<[f64; 3], DynamicsError> {
    let x = p.coords();
    let factors = growth_factors(x, params.abc(), speed.eval(&x));
    let mut y = [0.0; 3];
    for i in 0..3 {
        if x[i] == 0.0 {
            continue;
        }
        let fi = factors[i];
        if fi.is_nan() || fi <= 0.0 || fi.is_infinite() {
            return Err(DynamicsError::NonPositiveFactor {
                species: i,
                factor: fi,
            });
        }
        y[i] = x[i] * fi;
    }
    Ok(y)
}

/// One application of the operator on linear frequencies, renormalised by
/// the compensated sum. Log-domain inputs are read through their
/// frequencies; coordinates below the double range act as zeros.
pub fn step(
    p: &SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
) -> Result<SimplexPoint, DynamicsError> {
    let y = raw_step(p, params, speed)?;
    Ok(SimplexPoint::normalized_linear(y))
}

/// One application of the operator in log space:
/// `ln x_i' = ln x_i + ln(1 + g_i f) − lse`.
pub fn step_log(
    p: &SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
) -> Result<SimplexPoint, DynamicsError> {
    let lx = p.log_coords();
    let f = speed.eval(&p.coords());
    let lf = log_growth_factors(p, params, f)?;
    let updated: [f64; 3] = std::array::from_fn(|i| lx[i] + lf[i]);
    Ok(SimplexPoint::normalized_log(updated))
}

/// `y_i = x_i / λ_i`.
pub fn ratios(p: &SimplexPoint, params: &Parameters) -> [f64; 3] {
    let lx = p.log_coords();
    let l = params.lambdas();
    std::array::from_fn(|i| (lx[i] - l[i].ln()).exp())
}

/// The operator written on rescaled coordinates `y = x / λ`:
/// `y_i' = y_i (1 + K_i f (±y_i y_{i+1} ∓ y_{i+2}²))` with
/// `K_i = λ_i^{1/3} λ_{i+1}^{4/3} λ_{i+2}^{4/3}` and the signs of the
/// corresponding coefficients. Not renormalised.
pub fn rescaled_step(y: [f64; 3], params: &Parameters, f: f64) -> [f64; 3] {
    let l = params.lambdas();
    let (cross, square) = (params.cross(), params.square());
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let weight = l[i].cbrt() * (l[j] * l[k]).cbrt().powi(4);
        let g = cross[i].signum() * y[i] * y[j] - square[i].signum() * y[k] * y[k];
        y[i] * (1.0 + weight * f * g)
    })
}

/// The operator restricted to an edge of the simplex. On the edge without
/// species `z`, with `u = x_{z+1}`, `v = x_{z+2}` and `q` the coefficient
/// coupling them:
///
/// ```text
/// u' = u (1 + q u v f),   v' = v (1 − q u² f)
/// ```
///
/// Vertices are returned unchanged. Interior points are rejected.
pub fn restrict_to_face(
    p: &SimplexPoint,
    params: &Parameters,
    speed: &SpeedFunction,
) -> Result<SimplexPoint, DynamicsError> {
    let x = p.coords();
    let zeros: Vec<usize> = (0..3).filter(|&i| x[i] == 0.0).collect();
    let z = match zeros.as_slice() {
        [] => return Err(DynamicsError::NotOnFace),
        [_, _] | [_, _, _] => return Ok(p.to_linear()),
        [z] => *z,
        _ => unreachable!(),
    };
    let (u, v) = ((z + 1) % 3, (z + 2) % 3);
    let q = params.square()[v];
    let f = speed.eval(&x);
    let gain = 1.0 + q * f * x[u] * x[v];
    // 1 − q u² f with u = 1 − v, free of cancellation
    let loss = (1.0 - q * f) + q * f * x[v] * (2.0 - x[v]);
    if !(gain > 0.0 && loss > 0.0) {
        return Err(DynamicsError::NonPositiveFactor {
            species: if gain > 0.0 { v } else { u },
            factor: gain.min(loss),
        });
    }
    let mut y = [0.0; 3];
    y[u] = x[u] * gain;
    y[v] = x[v] * loss;
    Ok(SimplexPoint::normalized_linear(y))
}
