#![allow(dead_code)]

use awcurve::profile::BishopChannels;
use awcurve::{CurvatureProfile, CurveSamples, Grid, Provenance, Vec3};
use rand::Rng;

/// Arc-length parametrized helix of radius `a` and pitch parameter `b`.
#[derive(Debug, Clone, Copy)]
pub struct Helix {
    pub a: f64,
    pub b: f64,
}

impl Helix {
    pub fn c(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn kappa(&self) -> f64 {
        self.a / (self.c() * self.c())
    }

    pub fn tau(&self) -> f64 {
        self.b / (self.c() * self.c())
    }

    pub fn point(&self, s: f64) -> Vec3 {
        let t = s / self.c();
        Vec3::new(self.a * t.cos(), self.a * t.sin(), self.b * t)
    }

    pub fn tangent(&self, s: f64) -> Vec3 {
        let t = s / self.c();
        Vec3::new(-self.a * t.sin(), self.a * t.cos(), self.b) / self.c()
    }

    pub fn samples(&self, length: f64, n: usize) -> CurveSamples {
        let h = length / (n - 1) as f64;
        let pts = (0..n).map(|i| self.point(i as f64 * h)).collect();
        CurveSamples::new(pts, 0.0, h).unwrap()
    }
}

pub fn circle_samples(radius: f64, length: f64, n: usize) -> CurveSamples {
    let h = length / (n - 1) as f64;
    let pts = (0..n)
        .map(|i| {
            let t = i as f64 * h / radius;
            Vec3::new(radius * t.cos(), radius * t.sin(), 0.0)
        })
        .collect();
    CurveSamples::new(pts, 0.0, h).unwrap()
}

/// `a0 + sum_j (a_j cos(j w s) + b_j sin(j w s))` with analytic derivatives.
#[derive(Debug, Clone)]
pub struct TrigPoly {
    pub a0: f64,
    pub w: f64,
    pub terms: Vec<(f64, f64)>,
}

impl TrigPoly {
    pub fn random(rng: &mut impl Rng, degree: usize) -> Self {
        Self {
            a0: rng.gen_range(-1.0..1.0),
            w: rng.gen_range(0.5..2.0),
            terms: (0..degree).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
        }
    }

    pub fn derivative(&self, s: f64, order: usize) -> f64 {
        let mut v = if order == 0 { self.a0 } else { 0.0 };
        for (j, (a, b)) in self.terms.iter().enumerate() {
            let f = (j + 1) as f64 * self.w;
            let (sn, cs) = (f * s).sin_cos();
            let (dc, ds) = match order % 4 {
                0 => (cs, sn),
                1 => (-sn, cs),
                2 => (-cs, -sn),
                _ => (sn, -cs),
            };
            v += f.powi(order as i32) * (a * dc + b * ds);
        }
        v
    }
}

/// Prescribed profile with analytic derivative channels.
pub fn trig_profile(k1: &TrigPoly, k2: &TrigPoly, grid: Grid) -> CurvatureProfile {
    let col = |p: &TrigPoly, order| grid.values().map(|s| p.derivative(s, order)).collect::<Vec<_>>();
    let ch = BishopChannels {
        k1: col(k1, 0),
        k2: col(k2, 0),
        dk1: col(k1, 1),
        dk2: col(k2, 1),
        ddk1: col(k1, 2),
        ddk2: col(k2, 2),
    };
    CurvatureProfile::from_bishop_channels(grid, ch, Provenance::Prescribed).unwrap()
}

/// Angle between two vectors.
pub fn angle(a: Vec3, b: Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}
