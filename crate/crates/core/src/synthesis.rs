//! Curves from prescribed curvatures.
//!
//! The Bishop equations
//!
//! ```text
//! g' = T,  T' = k1 M1 + k2 M2,  M1' = -k1 T,  M2' = -k2 T
//! ```
//!
//! are integrated with classic fourth-order Runge-Kutta on the grid, and the
//! triad is re-orthonormalized after every step.

use serde::{Deserialize, Serialize};

use crate::curve::{CurveSamples, Grid};
use crate::error::{Error, Result};
use crate::expr::{Expr, ScalarFunction};
use crate::frames::{unwrapped_angles, BishopField, DEFAULT_KAPPA_MIN};
use crate::profile::{integrate_torsion, BishopChannels, CurvatureProfile, FrenetChannels, Provenance};
use crate::vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `k1 = k2 = sign / (s + c)`.
    Aw1Canonical,
    /// `k1 = -k2 = sign / (s + c)`.
    WeakAw2Canonical,
}

/// One member of a closed-form solution family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalFamily {
    pub kind: FamilyKind,
    pub c: f64,
    pub sign: f64,
}

impl CanonicalFamily {
    pub fn new(kind: FamilyKind, c: f64, sign: f64) -> Result<Self> {
        if sign != 1.0 && sign != -1.0 {
            return Err(Error::InvalidParameter(format!("sign must be +1 or -1, got {sign}")));
        }
        if !c.is_finite() {
            return Err(Error::InvalidParameter(format!("c must be finite, got {c}")));
        }
        Ok(Self { kind, c, sign })
    }

    /// Defaults `c = 1`, `sign = +1`.
    pub fn standard(kind: FamilyKind) -> Self {
        Self { kind, c: 1.0, sign: 1.0 }
    }

    fn k2_factor(&self) -> f64 {
        match self.kind {
            FamilyKind::Aw1Canonical => 1.0,
            FamilyKind::WeakAw2Canonical => -1.0,
        }
    }

    /// Requires `s + c > 0` on `[start, end]`.
    pub fn check_range(&self, start: f64, end: f64) -> Result<()> {
        if start + self.c > 0.0 && end + self.c > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain(format!("s + c must stay positive on [{start}, {end}]; pole at s = {}", -self.c)))
        }
    }

    pub fn functions(&self) -> (ScalarFunction, ScalarFunction) {
        let k1 = Expr::reciprocal_shift(self.sign, self.c);
        let k2 = Expr::reciprocal_shift(self.sign * self.k2_factor(), self.c);
        (ScalarFunction::Expr(k1), ScalarFunction::Expr(k2))
    }
}

/// Exact channels of a canonical family on `grid`, derivatives included.
pub fn canonical_profile(family: CanonicalFamily, grid: Grid) -> Result<CurvatureProfile> {
    family.check_range(grid.s0, grid.end())?;
    let f2 = family.k2_factor();
    let mut k1 = Vec::with_capacity(grid.n);
    let mut dk1 = Vec::with_capacity(grid.n);
    let mut ddk1 = Vec::with_capacity(grid.n);
    for s in grid.values() {
        let r = 1.0 / (s + family.c);
        k1.push(family.sign * r);
        dk1.push(-family.sign * r * r);
        ddk1.push(2.0 * family.sign * r * r * r);
    }
    let neg = |v: &[f64]| v.iter().map(|x| f2 * x).collect::<Vec<_>>();
    let bishop = BishopChannels { k2: neg(&k1), dk2: neg(&dk1), ddk2: neg(&ddk1), k1, dk1, ddk1 };

    let root2 = std::f64::consts::SQRT_2;
    let theta = (f2 * family.sign).atan2(family.sign);
    let frenet = FrenetChannels {
        kappa: grid.values().map(|s| root2 / (s + family.c)).collect(),
        dkappa: grid.values().map(|s| -root2 / (s + family.c).powi(2)).collect(),
        ddkappa: grid.values().map(|s| 2.0 * root2 / (s + family.c).powi(3)).collect(),
        tau: vec![Some(0.0); grid.n],
        dtau: vec![Some(0.0); grid.n],
        theta: vec![Some(theta); grid.n],
    };
    Ok(CurvatureProfile { grid, bishop: Some(bishop), frenet: Some(frenet), provenance: Provenance::Prescribed })
}

/// Position and adapted frame at the first sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InitialFrame {
    pub position: Vec3,
    pub tangent: Vec3,
    pub m1: Vec3,
}

impl Default for InitialFrame {
    fn default() -> Self {
        Self { position: Vec3::ZERO, tangent: Vec3::X, m1: Vec3::Y }
    }
}

impl InitialFrame {
    pub fn validate(&self) -> Result<()> {
        let unit = |v: Vec3| (v.norm() - 1.0).abs() <= 1e-10;
        if !self.position.is_finite() {
            return Err(Error::InvalidParameter("initial position must be finite".into()));
        }
        if !unit(self.tangent) || !unit(self.m1) {
            return Err(Error::InvalidParameter("initial T and M1 must be unit vectors".into()));
        }
        if self.tangent.dot(self.m1).abs() > 1e-10 {
            return Err(Error::InvalidParameter("initial T and M1 must be orthogonal".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisSpec {
    pub k1: ScalarFunction,
    pub k2: ScalarFunction,
    pub s_start: f64,
    pub s_end: f64,
    pub n: usize,
    pub initial: InitialFrame,
    pub family: Option<CanonicalFamily>,
}

impl SynthesisSpec {
    pub fn new(k1: ScalarFunction, k2: ScalarFunction, s_start: f64, s_end: f64, n: usize) -> Self {
        Self { k1, k2, s_start, s_end, n, initial: InitialFrame::default(), family: None }
    }

    pub fn from_family(family: CanonicalFamily, s_start: f64, s_end: f64, n: usize) -> Self {
        let (k1, k2) = family.functions();
        Self { family: Some(family), ..Self::new(k1, k2, s_start, s_end, n) }
    }

    pub fn with_initial(mut self, initial: InitialFrame) -> Self {
        self.initial = initial;
        self
    }

    pub fn grid(&self) -> Result<Grid> {
        if self.n < 9 {
            return Err(Error::InsufficientSamples { needed: 9, got: self.n });
        }
        Grid::spanning(self.s_start, self.s_end, self.n)
    }

    pub fn validate(&self) -> Result<Grid> {
        let grid = self.grid()?;
        self.initial.validate()?;
        if let Some(f) = &self.family {
            f.check_range(self.s_start, self.s_end)?;
        }
        Ok(grid)
    }
}

/// Synthesized curve with its Bishop frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Synthesized {
    pub curve: CurveSamples,
    pub frame: BishopField,
    /// Largest change applied by a per-step re-orthonormalization.
    pub max_correction: f64,
}

#[derive(Clone, Copy)]
struct State {
    pos: Vec3,
    t: Vec3,
    m1: Vec3,
    m2: Vec3,
}

impl State {
    fn rate(&self, k1: f64, k2: f64) -> State {
        State { pos: self.t, t: self.m1 * k1 + self.m2 * k2, m1: -self.t * k1, m2: -self.t * k2 }
    }

    fn axpy(&self, h: f64, d: &State) -> State {
        State { pos: self.pos + d.pos * h, t: self.t + d.t * h, m1: self.m1 + d.m1 * h, m2: self.m2 + d.m2 * h }
    }

    /// Gram-Schmidt in the order T, M1, then `M2 = T x M1`.
    fn orthonormalized(&self) -> (State, f64) {
        let t = self.t / self.t.norm();
        let m1 = self.m1 - t * self.m1.dot(t);
        let m1 = m1 / m1.norm();
        let m2 = t.cross(m1);
        let correction = (t - self.t).norm().max((m1 - self.m1).norm()).max((m2 - self.m2).norm());
        (State { pos: self.pos, t, m1, m2 }, correction)
    }
}

/// RK4 over `grid` with curvatures tabulated on the half-step grid
/// (`2 n - 1` entries: grid points and interval midpoints).
fn integrate(half: &[(f64, f64)], grid: Grid, initial: &InitialFrame) -> Result<Synthesized> {
    debug_assert_eq!(half.len(), 2 * grid.n - 1);
    let h = grid.h;
    let tangent = initial.tangent;
    let start = State { pos: initial.position, t: tangent, m1: initial.m1, m2: tangent.cross(initial.m1) };
    let mut states = Vec::with_capacity(grid.n);
    states.push(start);
    let mut max_correction = 0.0f64;
    for i in 0..grid.n - 1 {
        let y = states[i];
        let (ka, kb, kc) = (half[2 * i], half[2 * i + 1], half[2 * i + 2]);
        let d1 = y.rate(ka.0, ka.1);
        let d2 = y.axpy(h / 2.0, &d1).rate(kb.0, kb.1);
        let d3 = y.axpy(h / 2.0, &d2).rate(kb.0, kb.1);
        let d4 = y.axpy(h, &d3).rate(kc.0, kc.1);
        let mut next = y;
        for (d, w) in [(&d1, 1.0), (&d2, 2.0), (&d3, 2.0), (&d4, 1.0)] {
            next = next.axpy(h * w / 6.0, d);
        }
        let (next, correction) = next.orthonormalized();
        if !next.pos.is_finite() || !next.t.is_finite() {
            return Err(Error::Evaluation { s: grid.s(i + 1), message: "integration diverged".into() });
        }
        max_correction = max_correction.max(correction);
        states.push(next);
    }

    let k1: Vec<f64> = (0..grid.n).map(|i| half[2 * i].0).collect();
    let k2: Vec<f64> = (0..grid.n).map(|i| half[2 * i].1).collect();
    let (theta, theta_defined) = unwrapped_angles(&k1, &k2, DEFAULT_KAPPA_MIN);
    let frame = BishopField {
        tangent: states.iter().map(|s| s.t).collect(),
        m1: states.iter().map(|s| s.m1).collect(),
        m2: states.iter().map(|s| s.m2).collect(),
        k1,
        k2,
        theta,
        theta_defined,
    };
    let curve = CurveSamples::new(states.iter().map(|s| s.pos).collect(), grid.s0, grid.h)?;
    Ok(Synthesized { curve, frame, max_correction })
}

/// Integrates the Bishop equations for `spec.k1`, `spec.k2`.
pub fn synthesize_from_bishop(spec: &SynthesisSpec) -> Result<Synthesized> {
    let grid = spec.validate()?;
    let half = grid.refined().values().map(|s| Ok((spec.k1.eval(s)?, spec.k2.eval(s)?))).collect::<Result<Vec<_>>>()?;
    integrate(&half, grid, &spec.initial)
}

/// Converts `(kappa, tau, theta0)` to Bishop curvatures and integrates them.
pub fn synthesize_from_frenet(
    kappa: &ScalarFunction,
    tau: &ScalarFunction,
    theta0: f64,
    grid: Grid,
    initial: &InitialFrame,
) -> Result<Synthesized> {
    if grid.n < 9 {
        return Err(Error::InsufficientSamples { needed: 9, got: grid.n });
    }
    initial.validate()?;
    let fine = grid.refined();
    let theta = integrate_torsion(tau, theta0, fine)?;
    let half = fine
        .values()
        .zip(theta)
        .map(|(s, th)| {
            let k = kappa.eval(s)?;
            if k < 0.0 {
                return Err(Error::Domain(format!("curvature must be non-negative, got {k} at s = {s}")));
            }
            Ok((k * th.cos(), k * th.sin()))
        })
        .collect::<Result<Vec<_>>>()?;
    integrate(&half, grid, initial)
}
