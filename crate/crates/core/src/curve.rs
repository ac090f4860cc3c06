//! Discrete arc-length parametrized curves.

use serde::{Deserialize, Serialize};

use crate::diff::differentiate;
use crate::error::{Error, Result};
use crate::spline::CubicSpline;
use crate::vec3::Vec3;

/// Uniform arc-length grid `s0, s0 + h, ..., s0 + (n - 1) h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub s0: f64,
    pub h: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(s0: f64, h: f64, n: usize) -> Result<Self> {
        if !(h > 0.0 && h.is_finite() && s0.is_finite()) {
            return Err(Error::InvalidParameter(format!("grid step must be positive and finite, got {h}")));
        }
        if n < 2 {
            return Err(Error::InsufficientSamples { needed: 2, got: n });
        }
        Ok(Self { s0, h, n })
    }

    /// `n` samples spanning `[start, end]` inclusive.
    pub fn spanning(start: f64, end: f64, n: usize) -> Result<Self> {
        if !(end > start) || !start.is_finite() || !end.is_finite() {
            return Err(Error::InvalidParameter(format!("range end must exceed start (got [{start}, {end}])")));
        }
        if n < 2 {
            return Err(Error::InsufficientSamples { needed: 2, got: n });
        }
        Grid::new(start, (end - start) / (n - 1) as f64, n)
    }

    #[inline]
    pub fn s(&self, i: usize) -> f64 {
        self.s0 + i as f64 * self.h
    }

    pub fn end(&self) -> f64 {
        self.s(self.n - 1)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.s(i))
    }

    /// The grid with every step halved (`2n - 1` samples).
    pub fn refined(&self) -> Grid {
        Grid { s0: self.s0, h: self.h / 2.0, n: 2 * self.n - 1 }
    }
}

/// A curve sampled at uniform arc-length steps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSamples {
    points: Vec<Vec3>,
    s0: f64,
    h: f64,
}

impl CurveSamples {
    /// Wraps points that are already spaced `h` apart in arc length.
    pub fn new(points: Vec<Vec3>, s0: f64, h: f64) -> Result<Self> {
        Grid::new(s0, h, points.len())?;
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        Ok(Self { points, s0, h })
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn grid(&self) -> Grid {
        Grid { s0: self.s0, h: self.h, n: self.points.len() }
    }

    pub fn into_points(self) -> Vec<Vec3> {
        self.points
    }

    /// Sum of consecutive chord lengths.
    pub fn chord_length(&self) -> f64 {
        polyline_length(&self.points)
    }
}

pub fn polyline_length(points: &[Vec3]) -> f64 {
    points.windows(2).map(|w| w[0].distance(w[1])).sum()
}

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
const GL_NODES: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL_WEIGHTS: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362,
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

struct SplineCurve {
    coords: [CubicSpline; 3],
}

impl SplineCurve {
    fn speed_on(&self, seg: usize, t: f64) -> f64 {
        let d = Vec3::new(
            self.coords[0].eval_on_segment(seg, t, 1),
            self.coords[1].eval_on_segment(seg, t, 1),
            self.coords[2].eval_on_segment(seg, t, 1),
        );
        d.norm()
    }

    fn point_on(&self, seg: usize, t: f64) -> Vec3 {
        Vec3::new(
            self.coords[0].eval_on_segment(seg, t, 0),
            self.coords[1].eval_on_segment(seg, t, 0),
            self.coords[2].eval_on_segment(seg, t, 0),
        )
    }

    /// Arc length of segment `seg` between parameters `a` and `b`.
    fn arc(&self, seg: usize, a: f64, b: f64) -> f64 {
        // Two Gauss-Legendre panels per call.
        let mid = 0.5 * (a + b);
        let mut total = 0.0;
        for (lo, hi) in [(a, mid), (mid, b)] {
            let c = 0.5 * (lo + hi);
            let r = 0.5 * (hi - lo);
            total += r * GL_NODES.iter().zip(GL_WEIGHTS).map(|(x, w)| w * self.speed_on(seg, c + r * x)).sum::<f64>();
        }
        total
    }
}

/// Resample a polyline to `n` points equally spaced in arc length.
///
/// A natural cubic spline is fitted per coordinate against cumulative chord
/// length; its arc length is integrated per segment and inverted with
/// safeguarded Newton steps. The end points are preserved exactly and the
/// returned step is the spline arc length divided by `n - 1`.
pub fn resample_arclength(points: &[Vec3], n: usize) -> Result<CurveSamples> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::DegenerateInput("non-finite coordinate".into()));
    }
    let distinct = points.windows(2).any(|w| w[0] != w[1]);
    if points.len() < 2 || !distinct {
        return Err(Error::DegenerateInput("fewer than 2 distinct points".into()));
    }
    if let Some(i) = points.windows(2).position(|w| w[0].distance(w[1]) <= 0.0) {
        return Err(Error::DegenerateInput(format!("coincident consecutive points at index {i} and {}", i + 1)));
    }
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }

    let mut knots = Vec::with_capacity(points.len());
    let mut acc = 0.0;
    knots.push(0.0);
    for w in points.windows(2) {
        acc += w[0].distance(w[1]);
        knots.push(acc);
    }
    let coord = |c: usize| points.iter().map(|p| p.component(c)).collect::<Vec<_>>();
    let curve = SplineCurve {
        coords: [
            CubicSpline::natural(&knots, &coord(0))?,
            CubicSpline::natural(&knots, &coord(1))?,
            CubicSpline::natural(&knots, &coord(2))?,
        ],
    };

    let segments = knots.len() - 1;
    let mut cumulative = Vec::with_capacity(knots.len());
    cumulative.push(0.0);
    for seg in 0..segments {
        let prev = cumulative[seg];
        cumulative.push(prev + curve.arc(seg, knots[seg], knots[seg + 1]));
    }
    let total = cumulative[segments];
    let h = total / (n - 1) as f64;

    let mut out = Vec::with_capacity(n);
    out.push(points[0]);
    for j in 1..n - 1 {
        let target = j as f64 * h;
        let seg = cumulative.partition_point(|&c| c <= target).saturating_sub(1).min(segments - 1);
        let want = target - cumulative[seg];
        let (a, b) = (knots[seg], knots[seg + 1]);
        let seg_len = cumulative[seg + 1] - cumulative[seg];
        let mut lo = a;
        let mut hi = b;
        let mut t = a + (b - a) * (want / seg_len).clamp(0.0, 1.0);
        for _ in 0..60 {
            let f = curve.arc(seg, a, t) - want;
            if f == 0.0 {
                break;
            }
            if f > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let mut next = t - f / curve.speed_on(seg, t);
            if !(next >= lo && next <= hi) || !next.is_finite() {
                next = 0.5 * (lo + hi);
            }
            let done = (next - t).abs() <= 1e-15 * (b - a);
            t = next;
            if done {
                break;
            }
        }
        out.push(curve.point_on(seg, t));
    }
    out.push(points[points.len() - 1]);
    CurveSamples::new(out, 0.0, h)
}

/// Derivatives of orders `1..=order` of the sampled curve.
///
/// Requires `n >= 2 * order + 1`.
pub fn derivatives(curve: &CurveSamples, order: usize) -> Result<Vec<Vec<Vec3>>> {
    if !(1..=4).contains(&order) {
        return Err(Error::InvalidOrder(order));
    }
    let n = curve.len();
    let needed = 2 * order + 1;
    if n < needed {
        return Err(Error::InsufficientSamples { needed, got: n });
    }
    let coords: [Vec<f64>; 3] = std::array::from_fn(|c| curve.points().iter().map(|p| p.component(c)).collect());
    (1..=order)
        .map(|k| {
            let [x, y, z] = [0, 1, 2].map(|c| differentiate(&coords[c], curve.h(), k, 1));
            let (x, y, z) = (x?, y?, z?);
            Ok((0..n).map(|i| Vec3::new(x[i], y[i], z[i])).collect())
        })
        .collect()
}
