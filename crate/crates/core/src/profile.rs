//! Curvature profiles and the Frenet <-> Bishop conversion.
//!
//! With `theta` the angle from `M1` to the principal normal:
//! `k1 = kappa cos(theta)`, `k2 = kappa sin(theta)`, `tau = theta'`.

use serde::{Deserialize, Serialize};

use crate::curve::{CurveSamples, Grid};
use crate::diff::differentiate;
use crate::error::{Error, Result};
use crate::expr::ScalarFunction;
use crate::frames::{bishop_frame, frenet_frame, unwrapped_angles, BishopField, FrenetField, DEFAULT_KAPPA_MIN};
use crate::vec3::Vec3;

/// Stencil spacing used for derivative channels of measured profiles.
pub const DEFAULT_DERIVATIVE_SPACING: f64 = 0.03;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    MeasuredFromCurve,
    Prescribed,
}

/// Bishop curvatures and their first two derivatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BishopChannels {
    pub k1: Vec<f64>,
    pub k2: Vec<f64>,
    pub dk1: Vec<f64>,
    pub dk2: Vec<f64>,
    pub ddk1: Vec<f64>,
    pub ddk2: Vec<f64>,
}

impl BishopChannels {
    /// Derivative channels by finite differences with nodes `stride` samples apart.
    pub fn from_values(k1: Vec<f64>, k2: Vec<f64>, h: f64, stride: usize) -> Result<Self> {
        Ok(Self {
            dk1: differentiate(&k1, h, 1, stride)?,
            dk2: differentiate(&k2, h, 1, stride)?,
            ddk1: differentiate(&k1, h, 2, stride)?,
            ddk2: differentiate(&k2, h, 2, stride)?,
            k1,
            k2,
        })
    }

    pub fn len(&self) -> usize {
        self.k1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k1.is_empty()
    }
}

/// Curvature, torsion, development angle and derivatives. Torsion and angle
/// are `None` where the Frenet frame is undefined.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrenetChannels {
    pub kappa: Vec<f64>,
    pub dkappa: Vec<f64>,
    pub ddkappa: Vec<f64>,
    pub tau: Vec<Option<f64>>,
    pub dtau: Vec<Option<f64>>,
    pub theta: Vec<Option<f64>>,
}

impl FrenetChannels {
    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    pub fn defined(&self, i: usize, kappa_min: f64) -> bool {
        self.kappa[i] > kappa_min && self.tau[i].is_some() && self.dtau[i].is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureProfile {
    pub grid: Grid,
    pub bishop: Option<BishopChannels>,
    pub frenet: Option<FrenetChannels>,
    pub provenance: Provenance,
}

impl CurvatureProfile {
    pub fn len(&self) -> usize {
        self.grid.n
    }

    pub fn is_empty(&self) -> bool {
        self.grid.n == 0
    }

    pub fn bishop(&self) -> Result<&BishopChannels> {
        self.bishop.as_ref().ok_or(Error::IncompleteProfile("k1/k2"))
    }

    pub fn frenet(&self) -> Result<&FrenetChannels> {
        self.frenet.as_ref().ok_or(Error::IncompleteProfile("kappa/tau"))
    }

    /// Prescribed Bishop curvatures sampled on `grid`.
    ///
    /// Tabulated inputs take their derivatives from the interpolant; parsed
    /// expressions are differentiated by finite differences on the grid.
    pub fn from_bishop_functions(k1: &ScalarFunction, k2: &ScalarFunction, grid: Grid) -> Result<Self> {
        let bishop = match (k1, k2) {
            (ScalarFunction::Tabulated(a), ScalarFunction::Tabulated(b)) => {
                let chan = |f: &crate::expr::Tabulated, order| {
                    grid.values().map(|s| f.derivative(s, order)).collect::<Result<Vec<_>>>()
                };
                BishopChannels {
                    k1: chan(a, 0)?,
                    k2: chan(b, 0)?,
                    dk1: chan(a, 1)?,
                    dk2: chan(b, 1)?,
                    ddk1: chan(a, 2)?,
                    ddk2: chan(b, 2)?,
                }
            }
            _ => BishopChannels::from_values(k1.sample(grid.values())?, k2.sample(grid.values())?, grid.h, 1)?,
        };
        Ok(Self { grid, bishop: Some(bishop), frenet: None, provenance: Provenance::Prescribed })
    }

    /// Bishop channels with their derivatives given in closed form.
    pub fn from_bishop_channels(grid: Grid, bishop: BishopChannels, provenance: Provenance) -> Result<Self> {
        let fields = [&bishop.k1, &bishop.k2, &bishop.dk1, &bishop.dk2, &bishop.ddk1, &bishop.ddk2];
        if fields.iter().any(|c| c.len() != grid.n) {
            return Err(Error::InvalidParameter("channel lengths must match the grid".into()));
        }
        Ok(Self { grid, bishop: Some(bishop), frenet: None, provenance })
    }
}

/// Angle `theta0 + integral(tau)` on `grid`, by composite Simpson steps that
/// evaluate `tau` at each interval midpoint.
pub fn integrate_torsion(tau: &ScalarFunction, theta0: f64, grid: Grid) -> Result<Vec<f64>> {
    let mut theta = Vec::with_capacity(grid.n);
    theta.push(theta0);
    let mut prev = tau.eval(grid.s(0))?;
    for i in 1..grid.n {
        let (a, b) = (grid.s(i - 1), grid.s(i));
        let mid = tau.eval(0.5 * (a + b))?;
        let next = tau.eval(b)?;
        let step = (b - a) / 6.0 * (prev + 4.0 * mid + next);
        theta.push(theta[i - 1] + step);
        prev = next;
    }
    Ok(theta)
}

/// Derivatives over each maximal run of defined samples; `None` elsewhere and
/// on runs shorter than two samples.
fn differentiate_runs(values: &[Option<f64>], h: f64, order: usize, stride: usize) -> Result<Vec<Option<f64>>> {
    let mut out = vec![None; values.len()];
    let mut i = 0;
    while i < values.len() {
        if values[i].is_none() {
            i += 1;
            continue;
        }
        let start = i;
        while i < values.len() && values[i].is_some() {
            i += 1;
        }
        if i - start >= 2 {
            let run: Vec<f64> = values[start..i].iter().map(|v| v.expect("defined run")).collect();
            for (k, d) in differentiate(&run, h, order, stride)?.into_iter().enumerate() {
                out[start + k] = Some(d);
            }
        }
    }
    Ok(out)
}

fn frenet_channels(
    kappa: Vec<f64>,
    tau: Vec<Option<f64>>,
    theta: Vec<Option<f64>>,
    h: f64,
    stride: usize,
) -> Result<FrenetChannels> {
    Ok(FrenetChannels {
        dkappa: differentiate(&kappa, h, 1, stride)?,
        ddkappa: differentiate(&kappa, h, 2, stride)?,
        dtau: differentiate_runs(&tau, h, 1, stride)?,
        kappa,
        tau,
        theta,
    })
}

/// Bishop description of prescribed `(kappa, tau, theta0)`.
pub fn frenet_to_bishop(
    kappa: &ScalarFunction,
    tau: &ScalarFunction,
    theta0: f64,
    grid: Grid,
) -> Result<CurvatureProfile> {
    let kappa_v = kappa.sample(grid.values())?;
    let tau_v = tau.sample(grid.values())?;
    let theta = integrate_torsion(tau, theta0, grid)?;
    let k1 = kappa_v.iter().zip(&theta).map(|(k, t)| k * t.cos()).collect();
    let k2 = kappa_v.iter().zip(&theta).map(|(k, t)| k * t.sin()).collect();
    let bishop = BishopChannels::from_values(k1, k2, grid.h, 1)?;
    let frenet = frenet_channels(
        kappa_v,
        tau_v.into_iter().map(Some).collect(),
        theta.into_iter().map(Some).collect(),
        grid.h,
        1,
    )?;
    Ok(CurvatureProfile { grid, bishop: Some(bishop), frenet: Some(frenet), provenance: Provenance::Prescribed })
}

/// Frenet description of a profile's Bishop curvatures.
///
/// `kappa = hypot(k1, k2)`, `theta` is the unwrapped `atan2(k2, k1)` and
/// `tau = theta'`. Where `kappa < kappa_min` the angle and torsion are undefined.
pub fn bishop_to_frenet(profile: &CurvatureProfile, kappa_min: f64) -> Result<CurvatureProfile> {
    bishop_to_frenet_strided(profile, kappa_min, 1)
}

pub(crate) fn bishop_to_frenet_strided(
    profile: &CurvatureProfile,
    kappa_min: f64,
    stride: usize,
) -> Result<CurvatureProfile> {
    let b = profile.bishop()?;
    let kappa: Vec<f64> = b.k1.iter().zip(&b.k2).map(|(a, c)| a.hypot(*c)).collect();
    let (theta, defined) = unwrapped_angles(&b.k1, &b.k2, kappa_min);
    let theta: Vec<Option<f64>> = theta.into_iter().zip(defined).map(|(t, d)| d.then_some(t)).collect();
    let tau = differentiate_runs(&theta, profile.grid.h, 1, stride)?;
    let frenet = frenet_channels(kappa, tau, theta, profile.grid.h, stride)?;
    Ok(CurvatureProfile { frenet: Some(frenet), ..profile.clone() })
}

/// Options for measuring a curvature profile from sampled points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureOptions {
    pub kappa_min: f64,
    /// Arc-length spacing of the stencils that differentiate the curvature
    /// channels. Wider spacing trades truncation error for less amplification
    /// of rounding noise in the positions.
    pub derivative_spacing: f64,
    pub initial_normal: Option<Vec3>,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        Self { kappa_min: DEFAULT_KAPPA_MIN, derivative_spacing: DEFAULT_DERIVATIVE_SPACING, initial_normal: None }
    }
}

impl MeasureOptions {
    pub fn stride(&self, h: f64) -> usize {
        if self.derivative_spacing.is_finite() && self.derivative_spacing > h {
            (self.derivative_spacing / h).round().max(1.0) as usize
        } else {
            1
        }
    }
}

/// Frames and curvature profile measured from a sampled curve.
#[derive(Debug, Clone)]
pub struct MeasuredCurve {
    pub frenet: FrenetField,
    pub bishop: BishopField,
    pub profile: CurvatureProfile,
}

pub fn measure_curve(curve: &CurveSamples, opts: &MeasureOptions) -> Result<MeasuredCurve> {
    let frenet = frenet_frame(curve, opts.kappa_min)?;
    let bishop = bishop_frame(curve, opts.initial_normal, opts.kappa_min)?;
    let h = curve.h();
    let stride = opts.stride(h);
    let bishop_channels = BishopChannels::from_values(bishop.k1.clone(), bishop.k2.clone(), h, stride)?;
    let theta = (0..curve.len())
        .map(|i| (frenet.frenet_defined(i) && bishop.theta_defined[i]).then(|| bishop.theta[i]))
        .collect();
    let frenet_channels = frenet_channels(frenet.kappa.clone(), frenet.tau.clone(), theta, h, stride)?;
    let profile = CurvatureProfile {
        grid: curve.grid(),
        bishop: Some(bishop_channels),
        frenet: Some(frenet_channels),
        provenance: Provenance::MeasuredFromCurve,
    };
    Ok(MeasuredCurve { frenet, bishop, profile })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> ScalarFunction {
        ScalarFunction::constant(v)
    }

    #[test]
    fn circle_profile_constant() {
        let grid = Grid::spanning(0.0, 3.0, 31).unwrap();
        let p = frenet_to_bishop(&c(1.0), &c(0.0), 0.0, grid).unwrap();
        let b = p.bishop().unwrap();
        assert!(b.k1.iter().all(|&k| k == 1.0));
        assert!(b.k2.iter().all(|&k| k == 0.0));
    }

    #[test]
    fn helix_profile_matches_closed_form() {
        let grid = Grid::spanning(0.0, 4.0 * std::f64::consts::PI, 2001).unwrap();
        let p = frenet_to_bishop(&c(0.5), &c(0.5), 0.0, grid).unwrap();
        let b = p.bishop().unwrap();
        for (i, s) in grid.values().enumerate() {
            assert!((b.k1[i] - (s / 2.0).cos() / 2.0).abs() < 1e-8);
            assert!((b.k2[i] - (s / 2.0).sin() / 2.0).abs() < 1e-8);
        }
    }

    #[test]
    fn constant_rotation_of_five() {
        let grid = Grid::spanning(0.0, 1.0, 11).unwrap();
        let p = frenet_to_bishop(&c(5.0), &c(0.0), 4f64.atan2(3.0), grid).unwrap();
        let b = p.bishop().unwrap();
        for i in 0..11 {
            assert!((b.k1[i] - 3.0).abs() < 1e-12 && (b.k2[i] - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn constants_back_to_frenet() {
        let grid = Grid::spanning(0.0, 1.0, 21).unwrap();
        let p = CurvatureProfile::from_bishop_functions(&c(3.0), &c(4.0), grid).unwrap();
        let f = bishop_to_frenet(&p, DEFAULT_KAPPA_MIN).unwrap();
        let fr = f.frenet().unwrap();
        for i in 0..21 {
            assert_eq!(fr.kappa[i], 5.0);
            assert!(fr.tau[i].unwrap().abs() < 1e-12);
            assert!((fr.theta[i].unwrap() - 0.927_295_218_001_612_2).abs() < 1e-12);
        }
    }

    #[test]
    fn helix_bishop_inverse() {
        let grid = Grid::spanning(0.0, 4.0 * std::f64::consts::PI, 2001).unwrap();
        let k1 = ScalarFunction::parse("cos(s/2)/2").unwrap();
        let k2 = ScalarFunction::parse("sin(s/2)/2").unwrap();
        let p = CurvatureProfile::from_bishop_functions(&k1, &k2, grid).unwrap();
        let f = bishop_to_frenet(&p, DEFAULT_KAPPA_MIN).unwrap();
        let fr = f.frenet().unwrap();
        for i in 4..1997 {
            assert!((fr.kappa[i] - 0.5).abs() < 1e-6);
            assert!((fr.tau[i].unwrap() - 0.5).abs() < 1e-6);
        }
    }

    #[test]
    fn vanishing_curvature_is_flagged() {
        let grid = Grid::spanning(0.0, 1.0, 21).unwrap();
        let p = CurvatureProfile::from_bishop_functions(&c(0.0), &c(0.0), grid).unwrap();
        let f = bishop_to_frenet(&p, DEFAULT_KAPPA_MIN).unwrap();
        let fr = f.frenet().unwrap();
        assert!(fr.kappa.iter().all(|&k| k == 0.0));
        assert!(fr.theta.iter().all(Option::is_none));
        assert!(fr.tau.iter().all(Option::is_none));
    }

    #[test]
    fn missing_channels() {
        let grid = Grid::spanning(0.0, 1.0, 21).unwrap();
        let p = CurvatureProfile { grid, bishop: None, frenet: None, provenance: Provenance::Prescribed };
        assert!(matches!(bishop_to_frenet(&p, 1e-8), Err(Error::IncompleteProfile(_))));
    }

    #[test]
    fn runs_are_differentiated_separately() {
        let v: Vec<Option<f64>> = (0..20).map(|i| if i == 9 { None } else { Some(2.0 * i as f64) }).collect();
        let d = differentiate_runs(&v, 1.0, 1, 1).unwrap();
        assert!(d[9].is_none());
        for (i, x) in d.iter().enumerate().filter(|(i, _)| *i != 9) {
            assert!((x.unwrap() - 2.0).abs() < 1e-12, "sample {i}");
        }
    }
}
