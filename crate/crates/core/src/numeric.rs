//! Small floating-point kernels shared by the simplex and dynamics code.

/// Neumaier (improved Kahan-Babuska) summation.
pub fn compensated_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// `ln(sum(exp(v)))` with the max shift. Returns `-inf` when every entry is `-inf`.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let shifted: Vec<f64> = values.iter().map(|&v| (v - max).exp()).collect();
    max + compensated_sum(&shifted).ln()
}

/// Natural log that maps an exact zero to `-inf` instead of producing NaN on
/// negative zero.
#[inline]
pub fn ln_or_neg_inf(x: f64) -> f64 {
    if x == 0.0 {
        f64::NEG_INFINITY
    } else {
        x.ln()
    }
}
