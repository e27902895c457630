//! Iterated Cesàro means of an orbit.
//!
//! `c₀⁽ⁿ⁾ = x⁽ⁿ⁾` and `c_{k+1}⁽ⁿ⁾ = (1/(n+1)) Σ_{i≤n} c_k⁽ⁱ⁾`. Each `c_k⁽ⁿ⁾` is a
//! convex combination `Σ_i a_{i,k,n} x⁽ⁱ⁾` of the orbit; the weights obey
//! `a_{i,0,n} = δ_{in}`, `a_{i,k+1,n} = (1/(n+1)) Σ_{j=i..n} a_{i,k,j}`.

use super::AnalysisError;
use crate::simplex::SimplexPoint;

pub const MAX_CESARO_ORDER: usize = 64;

/// Largest `n` accepted by [`cesaro_coefficients`] and [`tail_mass`].
pub const COEFFICIENT_SIZE_LIMIT: usize = 100_000;

/// Running means of every order `0..=K`, updated in `O(K)` per point.
#[derive(Debug, Clone, PartialEq)]
pub struct CesaroState {
    pushed: u64,
    values: Vec<[f64; 3]>,
}

impl CesaroState {
    pub fn new(max_order: usize) -> Result<Self, AnalysisError> {
        if max_order > MAX_CESARO_ORDER {
            return Err(AnalysisError::OrderOverflow {
                requested: max_order,
                max: MAX_CESARO_ORDER,
            });
        }
        Ok(Self {
            pushed: 0,
            values: vec![[0.0; 3]; max_order + 1],
        })
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    /// Index `n` of the latest pushed point, `None` before the first push.
    pub fn step(&self) -> Option<u64> {
        self.pushed.checked_sub(1)
    }

    pub fn push(&mut self, x: &SimplexPoint) {
        self.push_coords(x.coords());
    }

    /// `c_k⁽ⁿ⁾ = (n c_k⁽ⁿ⁻¹⁾ + c_{k−1}⁽ⁿ⁾) / (n+1)`, lowest order first.
    pub fn push_coords(&mut self, x: [f64; 3]) {
        let n = self.pushed as f64;
        self.values[0] = x;
        for k in 1..self.values.len() {
            let lower = self.values[k - 1];
            let cur = &mut self.values[k];
            for i in 0..3 {
                cur[i] += (lower[i] - cur[i]) / (n + 1.0);
            }
        }
        self.pushed += 1;
    }

    /// `c_k` at the current step.
    pub fn mean(&self, k: usize) -> [f64; 3] {
        self.values[k]
    }

    pub fn means(&self) -> &[[f64; 3]] {
        &self.values
    }
}

/// The weights `a_{0,k,n}, …, a_{n,k,n}`.
///
/// For `k ≥ 1` the recursion unrolls to `a_{i,k,n} = w_n h_{k−1}(w_i, …, w_n)`
/// with `w_j = 1/(j+1)` and `h_m` the complete homogeneous symmetric
/// polynomial, which is accumulated from `i = n` downwards in `O(nk)`.
pub fn cesaro_coefficients(k: usize, n: usize) -> Result<Vec<f64>, AnalysisError> {
    if n > COEFFICIENT_SIZE_LIMIT {
        return Err(AnalysisError::SizeLimit {
            n,
            max: COEFFICIENT_SIZE_LIMIT,
        });
    }
    if k > MAX_CESARO_ORDER {
        return Err(AnalysisError::OrderOverflow {
            requested: k,
            max: MAX_CESARO_ORDER,
        });
    }
    let mut out = vec![0.0; n + 1];
    if k == 0 {
        out[n] = 1.0;
        return Ok(out);
    }
    let w_n = 1.0 / (n as f64 + 1.0);
    // h[m] = h_m(w_i, ..., w_n)
    let mut h = vec![0.0; k];
    h[0] = 1.0;
    for i in (0..=n).rev() {
        let w = 1.0 / (i as f64 + 1.0);
        for m in 1..k {
            h[m] += w * h[m - 1];
        }
        out[i] = w_n * h[k - 1];
    }
    Ok(out)
}

/// `Σ_{i=⌊εn⌋..n} a_{i,k,n}`: the weight the order-`k` mean puts on the last
/// `(1−ε)` fraction of the orbit.
pub fn tail_mass(k: usize, n: usize, eps: f64) -> Result<f64, AnalysisError> {
    let coeffs = cesaro_coefficients(k, n)?;
    let from = ((eps.clamp(0.0, 1.0) * n as f64).floor() as usize).min(n);
    Ok(crate::numeric::compensated_sum(&coeffs[from..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The defining recursion, tabulated over every `(i, j)`; quadratic in `n`.
    fn literal_coefficients(k: usize, n: usize) -> Vec<f64> {
        // table[j][i] = a_{i,order,j}
        let mut table: Vec<Vec<f64>> = (0..=n)
            .map(|j| (0..=j).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        for _ in 0..k {
            let next: Vec<Vec<f64>> = (0..=n)
                .map(|j| {
                    (0..=j)
                        .map(|i| (i..=j).map(|m| table[m][i]).sum::<f64>() / (j as f64 + 1.0))
                        .collect()
                })
                .collect();
            table = next;
        }
        table.pop().unwrap()
    }

    #[test]
    fn order_zero_and_one() {
        let c = cesaro_coefficients(0, 5).unwrap();
        assert_eq!(c, vec![0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let c = cesaro_coefficients(1, 9).unwrap();
        assert!(c.iter().all(|&v| (v - 0.1).abs() < 1e-17));
    }

    #[test]
    fn order_two_small_case() {
        let c = cesaro_coefficients(2, 2).unwrap();
        let want = [11.0 / 18.0, 5.0 / 18.0, 2.0 / 18.0];
        for (a, b) in c.iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn matches_the_literal_recursion() {
        for k in 0..=4 {
            for n in [0, 1, 2, 7, 40] {
                let fast = cesaro_coefficients(k, n).unwrap();
                let slow = literal_coefficients(k, n);
                for (a, b) in fast.iter().zip(&slow) {
                    assert!((a - b).abs() < 1e-15, "k={k} n={n}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            cesaro_coefficients(1, COEFFICIENT_SIZE_LIMIT + 1),
            Err(AnalysisError::SizeLimit { .. })
        ));
        assert!(matches!(
            CesaroState::new(MAX_CESARO_ORDER + 1),
            Err(AnalysisError::OrderOverflow { .. })
        ));
    }

    #[test]
    fn tail_mass_examples() {
        assert_eq!(tail_mass(0, 100, 0.7).unwrap(), 1.0);
        for n in [10usize, 99, 1000] {
            let want = 1.0 - (0.1 * n as f64).floor() / (n as f64 + 1.0);
            assert!((tail_mass(1, n, 0.1).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn second_order_tail_tends_to_integral() {
        // a_{i,2,n} ≈ ln(n/i)/n, so the tail mass tends to ∫_ε^1 ln(1/t) dt
        let eps: f64 = 0.1;
        let limit = 1.0 - eps * (1.0 + (1.0 / eps).ln());
        let m = tail_mass(2, 100_000, eps).unwrap();
        assert!((m - limit).abs() < 1e-3, "{m} vs {limit}");
    }

    #[test]
    fn streaming_means() {
        let x = SimplexPoint::new(0.2, 0.3, 0.5).unwrap();
        let mut st = CesaroState::new(3).unwrap();
        assert_eq!(st.step(), None);
        for _ in 0..50 {
            st.push(&x);
        }
        assert_eq!(st.step(), Some(49));
        for k in 0..=3 {
            for i in 0..3 {
                assert!((st.mean(k)[i] - x.x(i)).abs() < 1e-15);
            }
        }
        let mut st = CesaroState::new(1).unwrap();
        st.push(&SimplexPoint::vertex(0));
        st.push(&SimplexPoint::vertex(1));
        assert_eq!(st.mean(1), [0.5, 0.5, 0.0]);
    }
}
