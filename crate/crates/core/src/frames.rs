//! Frenet and Bishop (rotation-minimizing) frame fields along sampled curves.

use serde::{Deserialize, Serialize};

use crate::curve::{derivatives, CurveSamples};
use crate::error::{Error, Result};
use crate::vec3::Vec3;

/// Curvature below which the Frenet frame is treated as undefined.
pub const DEFAULT_KAPPA_MIN: f64 = 1e-8;

/// Minimum angle between a seed normal and the initial tangent.
const MIN_SEED_ANGLE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrenetField {
    pub tangent: Vec<Vec3>,
    /// `None` where the curvature does not exceed `kappa_min`.
    pub normal: Vec<Option<Vec3>>,
    pub binormal: Vec<Option<Vec3>>,
    pub kappa: Vec<f64>,
    pub tau: Vec<Option<f64>>,
}

impl FrenetField {
    pub fn len(&self) -> usize {
        self.tangent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tangent.is_empty()
    }

    pub fn frenet_defined(&self, i: usize) -> bool {
        self.normal[i].is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BishopField {
    pub tangent: Vec<Vec3>,
    pub m1: Vec<Vec3>,
    pub m2: Vec<Vec3>,
    pub k1: Vec<f64>,
    pub k2: Vec<f64>,
    /// Unwrapped angle from `m1` to the principal normal. Where the curvature
    /// vanishes the previous value is held and `theta_defined` is false.
    pub theta: Vec<f64>,
    pub theta_defined: Vec<bool>,
}

impl BishopField {
    pub fn len(&self) -> usize {
        self.tangent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tangent.is_empty()
    }

    /// Normal development angle recomputed with `kappa_min`.
    pub(crate) fn fill_theta(&mut self, kappa_min: f64) {
        let (theta, defined) = unwrapped_angles(&self.k1, &self.k2, kappa_min);
        self.theta = theta;
        self.theta_defined = defined;
    }
}

/// `atan2(k2, k1)` continued onto the branch nearest the previous defined
/// value. Samples with `hypot(k1, k2) < kappa_min` are undefined and hold the
/// previous angle (zero before the first defined sample).
pub fn unwrapped_angles(k1: &[f64], k2: &[f64], kappa_min: f64) -> (Vec<f64>, Vec<bool>) {
    use std::f64::consts::{PI, TAU};
    let mut theta = Vec::with_capacity(k1.len());
    let mut defined = Vec::with_capacity(k1.len());
    let mut last: Option<f64> = None;
    for (&a, &b) in k1.iter().zip(k2) {
        if a.hypot(b) < kappa_min || a.hypot(b) == 0.0 {
            theta.push(last.unwrap_or(0.0));
            defined.push(false);
            continue;
        }
        let raw = b.atan2(a);
        let value = match last {
            None => raw,
            Some(prev) => raw + TAU * ((prev - raw + PI) / TAU).floor(),
        };
        last = Some(value);
        theta.push(value);
        defined.push(true);
    }
    (theta, defined)
}

fn unit_tangents(first: &[Vec3]) -> Result<Vec<Vec3>> {
    first
        .iter()
        .enumerate()
        .map(|(i, d)| {
            d.try_normalize(1e-12).ok_or_else(|| Error::DegenerateInput(format!("vanishing tangent at sample {i}")))
        })
        .collect()
}

/// Frenet apparatus from finite differences of the curve.
///
/// `kappa = |g' x g''| / |g'|^3`, `tau = <g' x g'', g'''> / |g' x g''|^2`;
/// both reduce to the unit-speed forms on arc-length samples.
pub fn frenet_frame(curve: &CurveSamples, kappa_min: f64) -> Result<FrenetField> {
    if curve.len() < 9 {
        return Err(Error::InsufficientSamples { needed: 9, got: curve.len() });
    }
    let d = derivatives(curve, 3)?;
    let tangent = unit_tangents(&d[0])?;
    let n = curve.len();
    let mut field = FrenetField {
        tangent,
        normal: Vec::with_capacity(n),
        binormal: Vec::with_capacity(n),
        kappa: Vec::with_capacity(n),
        tau: Vec::with_capacity(n),
    };
    for i in 0..n {
        let (d1, d2, d3) = (d[0][i], d[1][i], d[2][i]);
        let t = field.tangent[i];
        let cross = d1.cross(d2);
        let speed = d1.norm();
        let kappa = cross.norm() / (speed * speed * speed);
        field.kappa.push(kappa);
        let normal = (kappa > kappa_min).then(|| (d2 - t * d2.dot(t)).try_normalize(0.0)).flatten();
        match normal {
            Some(normal) => {
                field.normal.push(Some(normal));
                field.binormal.push(Some(t.cross(normal)));
                field.tau.push(Some(cross.dot(d3) / cross.norm_squared()));
            }
            None => {
                field.normal.push(None);
                field.binormal.push(None);
                field.tau.push(None);
            }
        }
    }
    Ok(field)
}

/// Coordinate axis least aligned with `t`, made orthogonal to it.
pub fn default_initial_normal(t: Vec3) -> Vec3 {
    let (ax, ay, az) = (t.x.abs(), t.y.abs(), t.z.abs());
    let axis = if ax <= ay && ax <= az {
        Vec3::X
    } else if ay <= az {
        Vec3::Y
    } else {
        Vec3::Z
    };
    (axis - t * axis.dot(t)).try_normalize(0.0).expect("least aligned axis is never parallel")
}

/// `seed` made orthonormal to the unit tangent `t`.
pub fn orthogonal_seed(seed: Vec3, t: Vec3) -> Result<Vec3> {
    let len = seed.norm();
    if !(len > 0.0) || !seed.is_finite() {
        return Err(Error::DegenerateInitialNormal);
    }
    let perp = seed - t * seed.dot(t);
    if perp.norm() / len <= MIN_SEED_ANGLE.sin() {
        return Err(Error::DegenerateInitialNormal);
    }
    Ok(perp / perp.norm())
}

/// One double-reflection step transporting `r0` from `(x0, t0)` to `(x1, t1)`.
pub fn double_reflection_step(x0: Vec3, t0: Vec3, r0: Vec3, x1: Vec3, t1: Vec3) -> Vec3 {
    let v1 = x1 - x0;
    let c1 = v1.norm_squared();
    if c1 == 0.0 {
        return r0;
    }
    let r_l = r0 - v1 * (2.0 / c1 * v1.dot(r0));
    let t_l = t0 - v1 * (2.0 / c1 * v1.dot(t0));
    let v2 = t1 - t_l;
    let c2 = v2.norm_squared();
    if c2 <= f64::EPSILON * f64::EPSILON {
        return r_l;
    }
    r_l - v2 * (2.0 / c2 * v2.dot(r_l))
}

/// Bishop frame by the double-reflection method.
///
/// `M1` starts at `initial_normal` (orthogonalized against the first tangent)
/// or at [`default_initial_normal`]; every step is re-orthonormalized and
/// `M2 = T x M1`. The Bishop curvatures are the components of the discrete
/// `T' = g''` along `M1`, `M2`.
pub fn bishop_frame(curve: &CurveSamples, initial_normal: Option<Vec3>, kappa_min: f64) -> Result<BishopField> {
    if curve.len() < 5 {
        return Err(Error::InsufficientSamples { needed: 5, got: curve.len() });
    }
    let d = derivatives(curve, 2)?;
    let tangent = unit_tangents(&d[0])?;
    let pts = curve.points();
    let n = curve.len();

    let mut m1 = Vec::with_capacity(n);
    let first = match initial_normal {
        Some(seed) => orthogonal_seed(seed, tangent[0])?,
        None => default_initial_normal(tangent[0]),
    };
    m1.push(first);
    for i in 1..n {
        let r = double_reflection_step(pts[i - 1], tangent[i - 1], m1[i - 1], pts[i], tangent[i]);
        let t = tangent[i];
        let r = (r - t * r.dot(t))
            .try_normalize(0.0)
            .ok_or_else(|| Error::DegenerateInput(format!("frame collapsed at sample {i}")))?;
        m1.push(r);
    }
    let m2: Vec<Vec3> = tangent.iter().zip(&m1).map(|(t, r)| t.cross(*r)).collect();
    let k1: Vec<f64> = d[1].iter().zip(&m1).map(|(a, r)| a.dot(*r)).collect();
    let k2: Vec<f64> = d[1].iter().zip(&m2).map(|(a, r)| a.dot(*r)).collect();
    let mut field = BishopField { tangent, m1, m2, k1, k2, theta: Vec::new(), theta_defined: Vec::new() };
    field.fill_theta(kappa_min);
    Ok(field)
}
