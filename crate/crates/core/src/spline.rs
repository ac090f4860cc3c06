//! Natural cubic spline interpolation.

use crate::error::{Error, Result};

/// Natural cubic spline through `(knots[i], values[i])`.
///
/// Stored as knot values plus second derivatives at the knots; the second
/// derivative vanishes at both ends.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    knots: Vec<f64>,
    values: Vec<f64>,
    second: Vec<f64>,
}

impl CubicSpline {
    /// Knots must be finite and strictly increasing, with at least two of them.
    pub fn natural(knots: &[f64], values: &[f64]) -> Result<Self> {
        let n = knots.len();
        if n != values.len() {
            return Err(Error::InvalidParameter(format!(
                "spline needs matching knot and value counts ({n} vs {})",
                values.len()
            )));
        }
        if n < 2 {
            return Err(Error::InsufficientSamples { needed: 2, got: n });
        }
        if knots.iter().chain(values).any(|v| !v.is_finite()) {
            return Err(Error::DegenerateInput("non-finite spline data".into()));
        }
        if knots.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::DegenerateInput("spline knots must be strictly increasing".into()));
        }

        let mut second = vec![0.0; n];
        if n > 2 {
            // Thomas algorithm on the interior unknowns.
            let m = n - 2;
            let mut diag = vec![0.0; m];
            let mut upper = vec![0.0; m];
            let mut rhs = vec![0.0; m];
            for r in 0..m {
                let i = r + 1;
                let h0 = knots[i] - knots[i - 1];
                let h1 = knots[i + 1] - knots[i];
                diag[r] = 2.0 * (h0 + h1);
                upper[r] = h1;
                rhs[r] = 6.0 * ((values[i + 1] - values[i]) / h1 - (values[i] - values[i - 1]) / h0);
            }
            for r in 1..m {
                let lower = knots[r + 1] - knots[r];
                let w = lower / diag[r - 1];
                diag[r] -= w * upper[r - 1];
                rhs[r] -= w * rhs[r - 1];
            }
            second[m] = rhs[m - 1] / diag[m - 1];
            for r in (0..m - 1).rev() {
                second[r + 1] = (rhs[r] - upper[r] * second[r + 2]) / diag[r];
            }
        }

        Ok(Self { knots: knots.to_vec(), values: values.to_vec(), second })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.knots[0], self.knots[self.knots.len() - 1])
    }

    /// Index of the segment containing `t` (clamped to the end segments).
    pub fn segment(&self, t: f64) -> usize {
        let last = self.knots.len() - 2;
        self.knots.partition_point(|&k| k <= t).saturating_sub(1).min(last)
    }

    /// Value (`order == 0`) or derivative of order 1..=3 at `t`.
    ///
    /// Outside the knot range the end cubic is extended.
    pub fn eval_derivative(&self, t: f64, order: usize) -> f64 {
        let i = self.segment(t);
        self.eval_on_segment(i, t, order)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_derivative(t, 0)
    }

    pub(crate) fn eval_on_segment(&self, i: usize, t: f64, order: usize) -> f64 {
        let h = self.knots[i + 1] - self.knots[i];
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        let (m0, m1) = (self.second[i], self.second[i + 1]);
        let b = (y1 - y0) / h - h * (2.0 * m0 + m1) / 6.0;
        let c = m0 / 2.0;
        let d = (m1 - m0) / (6.0 * h);
        let u = t - self.knots[i];
        match order {
            0 => y0 + u * (b + u * (c + u * d)),
            1 => b + u * (2.0 * c + 3.0 * d * u),
            2 => 2.0 * c + 6.0 * d * u,
            3 => 6.0 * d,
            _ => 0.0,
        }
    }
}
