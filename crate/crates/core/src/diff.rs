//! Finite-difference differentiation of uniformly sampled channels.
//!
//! Interior samples use the fourth-order central stencils (5 points for the
//! first and second derivative, 7 points for the third and fourth). Samples
//! too close to either end fall back to an `order + 4` point window shifted
//! inside the data, which keeps fourth-order accuracy.

use crate::error::{Error, Result};

/// Finite-difference weights for derivatives `0..=max_order` at `z`,
/// given distinct `nodes` (Fornberg's recursion).
///
/// `result[k][j]` is the weight of `nodes[j]` for the `k`-th derivative.
pub fn fornberg_weights(z: f64, nodes: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - z;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] *= c4 / c3;
        }
        c1 = c2;
    }
    c
}

fn central_width(order: usize) -> usize {
    if order <= 2 {
        5
    } else {
        7
    }
}

/// Derivative of `order` (1..=4) of a channel sampled every `h`, using
/// stencil nodes `stride` samples apart.
///
/// `stride` is reduced automatically when the channel is too short for it.
pub fn differentiate(values: &[f64], h: f64, order: usize, stride: usize) -> Result<Vec<f64>> {
    if !(1..=4).contains(&order) {
        return Err(Error::InvalidOrder(order));
    }
    let n = values.len();
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }
    let one_sided = (order + 4).min(n);
    let stride = stride.max(1).min(((n - 1) / (one_sided - 1)).max(1));
    let step = stride as f64 * h;
    let scale = step.powi(order as i32);

    let width = central_width(order);
    let half = width / 2;
    let nodes: Vec<f64> = (0..width).map(|k| k as f64 - half as f64).collect();
    let central = fornberg_weights(0.0, &nodes, order).swap_remove(order);

    let side_nodes: Vec<f64> = (0..one_sided).map(|k| k as f64).collect();
    let span = (one_sided - 1) * stride;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let value = if i >= half * stride && i + half * stride < n {
            central.iter().enumerate().map(|(k, w)| w * values[i + k * stride - half * stride]).sum::<f64>()
        } else {
            let start = i.saturating_sub(span / 2).min(n - 1 - span);
            let z = (i - start) as f64 / stride as f64;
            let w = fornberg_weights(z, &side_nodes, order).swap_remove(order);
            w.iter().enumerate().map(|(k, w)| w * values[start + k * stride]).sum::<f64>()
        };
        out.push(value / scale);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn fornberg_reproduces_textbook_stencils() {
        let nodes = [-2.0, -1.0, 0.0, 1.0, 2.0];
        let w = fornberg_weights(0.0, &nodes, 2);
        let d1 = [1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0];
        let d2 = [-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0];
        assert!(close(&w[1], &d1, 1e-14));
        assert!(close(&w[2], &d2, 1e-14));

        let nodes7: Vec<f64> = (-3..=3).map(f64::from).collect();
        let w = fornberg_weights(0.0, &nodes7, 4);
        let d3 = [1.0, -8.0, 13.0, 0.0, -13.0, 8.0, -1.0].map(|v| v / 8.0);
        let d4 = [-1.0, 12.0, -39.0, 56.0, -39.0, 12.0, -1.0].map(|v| v / 6.0);
        assert!(close(&w[3], &d3, 1e-13));
        assert!(close(&w[4], &d4, 1e-12));
    }

    #[test]
    fn quartic_is_differentiated_exactly_including_ends() {
        let h = 0.1;
        let f = |s: f64| 1.0 - 2.0 * s + 0.5 * s * s - s.powi(3) + 0.25 * s.powi(4);
        let d = [
            |s: f64| -2.0 + s - 3.0 * s * s + s.powi(3),
            |s: f64| 1.0 - 6.0 * s + 3.0 * s * s,
            |s: f64| -6.0 + 6.0 * s,
            |_s: f64| 6.0,
        ];
        let values: Vec<f64> = (0..12).map(|i| f(i as f64 * h)).collect();
        for (order, exact) in d.iter().enumerate() {
            let got = differentiate(&values, h, order + 1, 1).unwrap();
            for (i, g) in got.iter().enumerate() {
                let e = exact(i as f64 * h);
                assert!((g - e).abs() < 1e-8, "order {} sample {i}: {g} vs {e}", order + 1);
            }
        }
    }

    #[test]
    fn strided_stencil_is_exact_on_quartic() {
        let h = 0.01;
        let values: Vec<f64> = (0..101).map(|i| (i as f64 * h).powi(4)).collect();
        let got = differentiate(&values, h, 2, 7).unwrap();
        for (i, g) in got.iter().enumerate() {
            let s = i as f64 * h;
            assert!((g - 12.0 * s * s).abs() < 1e-8);
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(differentiate(&[0.0; 10], 1.0, 5, 1), Err(Error::InvalidOrder(5))));
        assert!(matches!(differentiate(&[0.0; 10], 1.0, 0, 1), Err(Error::InvalidOrder(0))));
    }
}
