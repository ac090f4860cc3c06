//! AW(k)-type conditions in the Frenet and Bishop descriptions.
//!
//! Both sides work with three normal-plane vectors built from the fourth
//! derivative expansion of a unit-speed curve. In the Bishop basis
//! `(M1, M2)`:
//!
//! ```text
//! N1 = (k1, k2)
//! N2 = (k1', k2')
//! N3 = (k1'' - k1^3 - k1 k2^2,  k2'' - k2^3 - k1^2 k2)  =: (A, B)
//! ```
//!
//! and in the Frenet basis `(N, B)`:
//!
//! ```text
//! N1 = (kappa, 0)
//! N2 = (kappa', kappa tau)
//! N3 = (kappa'' - kappa^3 - kappa tau^2,  2 kappa' tau + kappa tau')
//! ```
//!
//! Residuals are normalized per sample by `|N3| + |N1|^3 + eps_norm` and the
//! verdict compares the sup over the trimmed interior against `tol`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::CurveSamples;
use crate::error::{Error, Result};
use crate::frames::DEFAULT_KAPPA_MIN;
use crate::profile::{bishop_to_frenet, measure_curve, CurvatureProfile, MeasureOptions, Provenance};

pub const SCHEMA_VERSION: &str = "1";
pub const DEFAULT_EPS_GS: f64 = 1e-10;
pub const DEFAULT_EPS_NORM: f64 = 1e-12;
pub const DEFAULT_TRIM: usize = 4;
/// Default tolerance for prescribed (analytic) profiles.
pub const DEFAULT_TOL_PRESCRIBED: f64 = 1e-6;
/// Default tolerance for profiles measured from sampled curves.
pub const DEFAULT_TOL_MEASURED: f64 = 1e-3;

/// Coefficients `a e1 + b e2` in an orthonormal basis of the normal plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PlaneVec {
    pub a: f64,
    pub b: f64,
}

impl PlaneVec {
    pub const ZERO: PlaneVec = PlaneVec { a: 0.0, b: 0.0 };

    pub const fn new(a: f64, b: f64) -> Self {
        Self { a, b }
    }

    pub fn dot(self, o: PlaneVec) -> f64 {
        self.a * o.a + self.b * o.b
    }

    pub fn norm(self) -> f64 {
        self.a.hypot(self.b)
    }

    /// Two-dimensional cross product `a1 b2 - b1 a2`.
    pub fn cross(self, o: PlaneVec) -> f64 {
        self.a * o.b - self.b * o.a
    }

    pub fn scale(self, k: f64) -> PlaneVec {
        PlaneVec::new(self.a * k, self.b * k)
    }

    /// Component orthogonal to the unit vector `u`.
    fn reject(self, u: PlaneVec) -> PlaneVec {
        self - u.scale(self.dot(u))
    }
}

impl std::ops::Add for PlaneVec {
    type Output = PlaneVec;
    fn add(self, o: PlaneVec) -> PlaneVec {
        PlaneVec::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for PlaneVec {
    type Output = PlaneVec;
    fn sub(self, o: PlaneVec) -> PlaneVec {
        PlaneVec::new(self.a - o.a, self.b - o.b)
    }
}

/// The three N-vectors at one sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainSample {
    pub n1: PlaneVec,
    pub n2: PlaneVec,
    pub n3: PlaneVec,
}

/// Per-sample N-chain; `None` marks samples excluded (undefined Frenet frame).
#[derive(Debug, Clone, PartialEq)]
pub struct NChain {
    pub samples: Vec<Option<ChainSample>>,
}

impl NChain {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn undefined_count(&self) -> usize {
        self.samples.iter().filter(|s| s.is_none()).count()
    }
}

/// N-chain in the Bishop basis `(M1, M2)`.
pub fn bishop_n_chain(profile: &CurvatureProfile) -> Result<NChain> {
    let b = profile.bishop()?;
    let samples = (0..b.len())
        .map(|i| {
            let (k1, k2) = (b.k1[i], b.k2[i]);
            Some(ChainSample {
                n1: PlaneVec::new(k1, k2),
                n2: PlaneVec::new(b.dk1[i], b.dk2[i]),
                n3: PlaneVec::new(b.ddk1[i] - k1 * k1 * k1 - k1 * k2 * k2, b.ddk2[i] - k2 * k2 * k2 - k1 * k1 * k2),
            })
        })
        .collect();
    Ok(NChain { samples })
}

/// N-chain in the Frenet basis `(N, B)`; samples with `kappa <= kappa_min`
/// are left undefined. Fails when no sample is defined.
pub fn frenet_n_chain(profile: &CurvatureProfile, kappa_min: f64) -> Result<NChain> {
    let f = profile.frenet()?;
    let samples: Vec<Option<ChainSample>> = (0..f.len())
        .map(|i| {
            if !f.defined(i, kappa_min) {
                return None;
            }
            let (k, dk, ddk) = (f.kappa[i], f.dkappa[i], f.ddkappa[i]);
            let (t, dt) = (f.tau[i]?, f.dtau[i]?);
            Some(ChainSample {
                n1: PlaneVec::new(k, 0.0),
                n2: PlaneVec::new(dk, k * t),
                n3: PlaneVec::new(ddk - k * k * k - k * t * t, 2.0 * dk * t + k * dt),
            })
        })
        .collect();
    if samples.iter().all(Option::is_none) {
        return Err(Error::UndefinedFrenet(samples.len()));
    }
    Ok(NChain { samples })
}

/// Gram-Schmidt normalized pair; `None` flags a degenerate vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarPair {
    pub n1_star: Option<PlaneVec>,
    pub n2_star: Option<PlaneVec>,
}

impl StarPair {
    pub fn degenerate_1(&self) -> bool {
        self.n1_star.is_none()
    }

    pub fn degenerate_2(&self) -> bool {
        self.n2_star.is_none()
    }
}

/// `N1* = N1/|N1|` and `N2*` the normalized part of `N2` orthogonal to `N1*`.
///
/// A vector whose norm does not exceed `eps` is flagged degenerate. When
/// `N1*` is degenerate, `N2*` is too.
pub fn gram_schmidt_star(n1: PlaneVec, n2: PlaneVec, eps: f64) -> StarPair {
    let l1 = n1.norm();
    if !(l1 > eps) {
        return StarPair { n1_star: None, n2_star: None };
    }
    let u1 = n1.scale(1.0 / l1);
    let rest = n2.reject(u1);
    let l2 = rest.norm();
    let n2_star = (l2 > eps).then(|| rest.scale(1.0 / l2));
    StarPair { n1_star: Some(u1), n2_star }
}

/// Deviation of `N3` from its expansion in the starred pair; `None` unless
/// both starred vectors exist.
pub fn decomposition_deviation(n3: PlaneVec, star: &StarPair) -> Option<f64> {
    let (u1, u2) = (star.n1_star?, star.n2_star?);
    let rebuilt = u1.scale(n3.dot(u1)) + u2.scale(n3.dot(u2));
    Some((n3 - rebuilt).norm())
}

/// Numerical rank of the 3x2 matrix with rows `N1, N2, N3`.
pub fn chain_rank(sample: &ChainSample, threshold: f64) -> usize {
    let rows = [sample.n1, sample.n2, sample.n3];
    // Singular values squared are the eigenvalues of the 2x2 Gram matrix.
    let g11: f64 = rows.iter().map(|r| r.a * r.a).sum();
    let g22: f64 = rows.iter().map(|r| r.b * r.b).sum();
    let g12: f64 = rows.iter().map(|r| r.a * r.b).sum();
    let mean = 0.5 * (g11 + g22);
    let spread = (0.25 * (g11 - g22) * (g11 - g22) + g12 * g12).sqrt();
    let hi = (mean + spread).max(0.0).sqrt();
    let lo = (mean - spread).max(0.0).sqrt();
    [hi, lo].iter().filter(|&&s| s > threshold).count()
}

/// Linear dependence of `N1, N2, N3` per sample. Three vectors of a plane
/// are always dependent, so every defined sample reports `true`.
pub fn dependence_check(chain: &NChain) -> Vec<bool> {
    chain
        .samples
        .iter()
        .map(|s| match s {
            Some(sample) => {
                let dependent = chain_rank(sample, 1e-10) < 3;
                debug_assert!(dependent);
                dependent
            }
            None => true,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AwCondition {
    #[serde(rename = "frenet-weak-aw2")]
    FrenetWeakAw2,
    #[serde(rename = "frenet-weak-aw3")]
    FrenetWeakAw3,
    #[serde(rename = "frenet-aw1")]
    FrenetAw1,
    #[serde(rename = "frenet-aw2")]
    FrenetAw2,
    #[serde(rename = "frenet-aw3")]
    FrenetAw3,
    #[serde(rename = "bishop-weak-aw2")]
    BishopWeakAw2,
    #[serde(rename = "bishop-weak-aw3")]
    BishopWeakAw3,
    #[serde(rename = "bishop-aw1")]
    BishopAw1,
    #[serde(rename = "bishop-aw2")]
    BishopAw2,
    #[serde(rename = "bishop-aw3")]
    BishopAw3,
    /// Bishop AW(2) and AW(3) with `k1^2 k1` in place of `k1^2 k2` in the
    /// second component of `N3`; only produced when literal forms are requested.
    #[serde(rename = "bishop-aw2-literal")]
    BishopAw2Literal,
    #[serde(rename = "bishop-aw3-literal")]
    BishopAw3Literal,
}

impl AwCondition {
    pub const FRENET: [AwCondition; 5] = [
        AwCondition::FrenetWeakAw2,
        AwCondition::FrenetWeakAw3,
        AwCondition::FrenetAw1,
        AwCondition::FrenetAw2,
        AwCondition::FrenetAw3,
    ];
    pub const BISHOP: [AwCondition; 5] = [
        AwCondition::BishopWeakAw2,
        AwCondition::BishopWeakAw3,
        AwCondition::BishopAw1,
        AwCondition::BishopAw2,
        AwCondition::BishopAw3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AwCondition::FrenetWeakAw2 => "frenet-weak-aw2",
            AwCondition::FrenetWeakAw3 => "frenet-weak-aw3",
            AwCondition::FrenetAw1 => "frenet-aw1",
            AwCondition::FrenetAw2 => "frenet-aw2",
            AwCondition::FrenetAw3 => "frenet-aw3",
            AwCondition::BishopWeakAw2 => "bishop-weak-aw2",
            AwCondition::BishopWeakAw3 => "bishop-weak-aw3",
            AwCondition::BishopAw1 => "bishop-aw1",
            AwCondition::BishopAw2 => "bishop-aw2",
            AwCondition::BishopAw3 => "bishop-aw3",
            AwCondition::BishopAw2Literal => "bishop-aw2-literal",
            AwCondition::BishopAw3Literal => "bishop-aw3-literal",
        }
    }

    pub fn is_bishop(self) -> bool {
        !AwCondition::FRENET.contains(&self)
    }

    /// The AW(1) condition of the same frame, which implies this one.
    fn implied_by(self) -> Option<AwCondition> {
        match self {
            AwCondition::FrenetAw1 | AwCondition::BishopAw1 => None,
            AwCondition::BishopAw2Literal | AwCondition::BishopAw3Literal => None,
            c if c.is_bishop() => Some(AwCondition::BishopAw1),
            _ => Some(AwCondition::FrenetAw1),
        }
    }
}

impl fmt::Display for AwCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-sample residuals of one condition. `None` marks excluded samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualField {
    pub condition: AwCondition,
    pub raw: Vec<Option<f64>>,
    pub normalized: Vec<Option<f64>>,
    pub degenerate: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualOptions {
    pub kappa_min: f64,
    pub eps_gs: f64,
    pub eps_norm: f64,
    /// Also report the Bishop AW(2)/AW(3) variants built with `k1^2 k1`.
    pub literal_forms: bool,
}

impl Default for ResidualOptions {
    fn default() -> Self {
        Self { kappa_min: DEFAULT_KAPPA_MIN, eps_gs: DEFAULT_EPS_GS, eps_norm: DEFAULT_EPS_NORM, literal_forms: false }
    }
}

struct FieldBuilder {
    field: ResidualField,
}

impl FieldBuilder {
    fn new(condition: AwCondition, n: usize) -> Self {
        Self {
            field: ResidualField {
                condition,
                raw: Vec::with_capacity(n),
                normalized: Vec::with_capacity(n),
                degenerate: Vec::with_capacity(n),
            },
        }
    }

    fn push(&mut self, raw: f64, scale: f64, degenerate: bool) {
        self.field.raw.push(Some(raw));
        self.field.normalized.push(Some(raw / scale));
        self.field.degenerate.push(degenerate);
    }

    fn skip(&mut self) {
        self.field.raw.push(None);
        self.field.normalized.push(None);
        self.field.degenerate.push(true);
    }
}

/// Residual of `N3 = <N3, u> u`, taking the projection as zero when `u` is degenerate.
fn projection_defect(n3: PlaneVec, u: Option<PlaneVec>) -> f64 {
    match u {
        Some(u) => n3.reject(u).norm(),
        None => n3.norm(),
    }
}

/// Residual fields of the five Bishop conditions (plus the literal forms when
/// requested), in the order of [`AwCondition::BISHOP`].
pub fn bishop_aw_residuals(profile: &CurvatureProfile, opts: &ResidualOptions) -> Result<Vec<ResidualField>> {
    let chain = bishop_n_chain(profile)?;
    let b = profile.bishop()?;
    let n = chain.len();
    let mut fields: Vec<FieldBuilder> = AwCondition::BISHOP.iter().map(|&c| FieldBuilder::new(c, n)).collect();
    let mut literal =
        [FieldBuilder::new(AwCondition::BishopAw2Literal, n), FieldBuilder::new(AwCondition::BishopAw3Literal, n)];
    for (i, sample) in chain.samples.iter().enumerate() {
        let c = sample.expect("Bishop chain is defined everywhere");
        let (k1, k2) = (b.k1[i], b.k2[i]);
        let (dk1, dk2) = (b.dk1[i], b.dk2[i]);
        let (a, bb) = (c.n3.a, c.n3.b);
        let star = gram_schmidt_star(c.n1, c.n2, opts.eps_gs);
        let scale = c.n3.norm() + c.n1.norm().powi(3) + opts.eps_norm;
        let low_order = star.degenerate_1();
        let n2_zero = !(c.n2.norm() > opts.eps_gs);

        fields[0].push(projection_defect(c.n3, star.n2_star), scale, star.degenerate_2());
        fields[1].push(projection_defect(c.n3, star.n1_star), scale, low_order);
        fields[2].push(a.abs().max(bb.abs()), scale, low_order);
        fields[3].push((dk2 * a - dk1 * bb).abs(), scale, low_order || n2_zero);
        fields[4].push((k2 * a - k1 * bb).abs(), scale, low_order);
        if opts.literal_forms {
            let b_literal = b.ddk2[i] - k2 * k2 * k2 - k1 * k1 * k1;
            literal[0].push((dk2 * a - dk1 * b_literal).abs(), scale, low_order || n2_zero);
            literal[1].push((k2 * a - k1 * b_literal).abs(), scale, low_order);
        }
    }
    let mut out: Vec<ResidualField> = fields.into_iter().map(|f| f.field).collect();
    if opts.literal_forms {
        out.extend(literal.into_iter().map(|f| f.field));
    }
    Ok(out)
}

/// Residual fields of the five Frenet conditions, in the order of
/// [`AwCondition::FRENET`]. Samples without a Frenet frame are excluded.
pub fn frenet_aw_residuals(profile: &CurvatureProfile, opts: &ResidualOptions) -> Result<Vec<ResidualField>> {
    let chain = match frenet_n_chain(profile, opts.kappa_min) {
        Err(Error::UndefinedFrenet(_)) => return Err(Error::NoValidSamples),
        other => other?,
    };
    let f = profile.frenet()?;
    let n = chain.len();
    let mut fields: Vec<FieldBuilder> = AwCondition::FRENET.iter().map(|&c| FieldBuilder::new(c, n)).collect();
    for (i, sample) in chain.samples.iter().enumerate() {
        let Some(c) = sample else {
            fields.iter_mut().for_each(FieldBuilder::skip);
            continue;
        };
        let (k, dk, ddk) = (f.kappa[i], f.dkappa[i], f.ddkappa[i]);
        let (t, dt) = (f.tau[i].unwrap_or(0.0), f.dtau[i].unwrap_or(0.0));
        let star = gram_schmidt_star(c.n1, c.n2, opts.eps_gs);
        let scale = c.n3.norm() + c.n1.norm().powi(3) + opts.eps_norm;
        let weak2 = (ddk - k * k * k - k * t * t).abs();
        let aw3 = (2.0 * dk * t + k * dt).abs();
        let aw2 = (2.0 * dk * dk * t + k * dk * dt - k * ddk * t + k.powi(4) * t + k * k * t.powi(3)).abs();
        let n2_zero = !(c.n2.norm() > opts.eps_gs);

        fields[0].push(weak2, scale, star.degenerate_2());
        fields[1].push(projection_defect(c.n3, star.n1_star), scale, star.degenerate_1());
        fields[2].push(weak2.max(aw3), scale, false);
        fields[3].push(aw2, scale, n2_zero);
        fields[4].push(aw3, scale, false);
    }
    Ok(fields.into_iter().map(|f| f.field).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionStatus {
    Evaluated,
    NoValidSamples,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: AwCondition,
    /// Sup of the normalized residual over the evaluated samples.
    pub residual: Option<f64>,
    pub verdict: bool,
    pub degenerate: bool,
    pub status: ConditionStatus,
    pub samples_evaluated: usize,
    pub degenerate_samples: usize,
}

/// Half-open range of sample indices that entered the sup-residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRange {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AwReport {
    pub schema_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
    pub provenance: Provenance,
    pub tol: f64,
    pub kappa_min: f64,
    pub samples: usize,
    pub trimmed_range: SampleRange,
    pub s_range: [f64; 2],
    pub conditions: Vec<ConditionResult>,
}

impl AwReport {
    pub fn get(&self, condition: AwCondition) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.condition == condition)
    }

    pub fn verdict(&self, condition: AwCondition) -> bool {
        self.get(condition).is_some_and(|c| c.verdict)
    }

    pub fn residual(&self, condition: AwCondition) -> Option<f64> {
        self.get(condition).and_then(|c| c.residual)
    }
}

/// Normalized per-sample residuals, one column per condition.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualTable {
    pub s: Vec<f64>,
    pub columns: Vec<(AwCondition, Vec<Option<f64>>)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub report: AwReport,
    pub table: ResidualTable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub tol: f64,
    /// Samples dropped at each end before taking sup-residuals.
    pub trim: usize,
    pub residual: ResidualOptions,
    pub measure: MeasureOptions,
}

impl ClassifyOptions {
    pub fn prescribed() -> Self {
        Self::with_tol(DEFAULT_TOL_PRESCRIBED)
    }

    pub fn measured() -> Self {
        Self::with_tol(DEFAULT_TOL_MEASURED)
    }

    pub fn with_tol(tol: f64) -> Self {
        Self { tol, trim: DEFAULT_TRIM, residual: ResidualOptions::default(), measure: MeasureOptions::default() }
    }

    pub fn kappa_min(mut self, kappa_min: f64) -> Self {
        self.residual.kappa_min = kappa_min;
        self.measure.kappa_min = kappa_min;
        self
    }
}

pub enum ClassifyInput<'a> {
    Curve(&'a CurveSamples),
    Profile(&'a CurvatureProfile),
}

fn summarize(field: &ResidualField, range: SampleRange, tol: f64) -> ConditionResult {
    let mut sup: Option<f64> = None;
    let mut evaluated = 0;
    let mut degenerate = 0;
    for i in range.start..range.end {
        if let Some(r) = field.normalized[i] {
            evaluated += 1;
            sup = Some(sup.map_or(r, |s: f64| s.max(r)));
            if field.degenerate[i] {
                degenerate += 1;
            }
        }
    }
    let status = if evaluated == 0 { ConditionStatus::NoValidSamples } else { ConditionStatus::Evaluated };
    ConditionResult {
        condition: field.condition,
        residual: sup,
        verdict: sup.is_some_and(|s| s < tol),
        degenerate: degenerate > 0 || evaluated == 0,
        status,
        samples_evaluated: evaluated,
        degenerate_samples: degenerate,
    }
}

fn no_valid_samples(condition: AwCondition) -> ConditionResult {
    ConditionResult {
        condition,
        residual: None,
        verdict: false,
        degenerate: true,
        status: ConditionStatus::NoValidSamples,
        samples_evaluated: 0,
        degenerate_samples: 0,
    }
}

/// Evaluates both residual batteries on a profile and builds the report and
/// the per-sample table.
///
/// A profile carrying only Bishop channels gets its Frenet channels derived
/// with [`bishop_to_frenet`].
pub fn evaluate_profile(profile: &CurvatureProfile, opts: &ClassifyOptions) -> Result<Evaluation> {
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {}", opts.tol)));
    }
    let n = profile.len();
    if n <= 2 * opts.trim {
        return Err(Error::InsufficientSamples { needed: 2 * opts.trim + 1, got: n });
    }
    let derived;
    let profile = if profile.frenet.is_none() {
        derived = bishop_to_frenet(profile, opts.residual.kappa_min)?;
        &derived
    } else {
        profile
    };
    let range = SampleRange { start: opts.trim, end: n - opts.trim };

    let bishop = bishop_aw_residuals(profile, &opts.residual)?;
    let frenet = match frenet_aw_residuals(profile, &opts.residual) {
        Ok(f) => Some(f),
        Err(Error::NoValidSamples) => None,
        Err(e) => return Err(e),
    };

    let mut conditions = Vec::new();
    let mut columns = Vec::new();
    match &frenet {
        Some(fields) => {
            for f in fields {
                conditions.push(summarize(f, range, opts.tol));
                columns.push((f.condition, f.normalized.clone()));
            }
        }
        None => {
            for c in AwCondition::FRENET {
                conditions.push(no_valid_samples(c));
                columns.push((c, vec![None; n]));
            }
        }
    }
    for f in &bishop {
        conditions.push(summarize(f, range, opts.tol));
        columns.push((f.condition, f.normalized.clone()));
    }

    // AW(1) means N3 = 0, which satisfies every other condition of its frame.
    let aw1: Vec<(AwCondition, bool)> = conditions
        .iter()
        .filter(|c| matches!(c.condition, AwCondition::FrenetAw1 | AwCondition::BishopAw1))
        .map(|c| (c.condition, c.verdict))
        .collect();
    for c in &mut conditions {
        if let Some(parent) = c.condition.implied_by() {
            if aw1.iter().any(|&(p, v)| p == parent && v) {
                c.verdict = true;
            }
        }
    }

    let report = AwReport {
        schema_version: SCHEMA_VERSION.to_string(),
        source: None,
        provenance: profile.provenance,
        tol: opts.tol,
        kappa_min: opts.residual.kappa_min,
        samples: n,
        trimmed_range: range,
        s_range: [profile.grid.s(range.start), profile.grid.s(range.end - 1)],
        conditions,
    };
    let table = ResidualTable { s: profile.grid.values().collect(), columns };
    Ok(Evaluation { report, table })
}

/// Measures the curve's profile and evaluates it.
pub fn evaluate_curve(curve: &CurveSamples, opts: &ClassifyOptions) -> Result<Evaluation> {
    let measured = measure_curve(curve, &opts.measure)?;
    evaluate_profile(&measured.profile, opts)
}

pub fn classify(input: ClassifyInput<'_>, opts: &ClassifyOptions) -> Result<AwReport> {
    let eval = match input {
        ClassifyInput::Curve(c) => evaluate_curve(c, opts)?,
        ClassifyInput::Profile(p) => evaluate_profile(p, opts)?,
    };
    Ok(eval.report)
}
