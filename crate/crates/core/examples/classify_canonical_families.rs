//! AW(k) classification of the closed-form families, a circle and a helix.

use awcurve::cli::summary_table;
use awcurve::{
    canonical_profile, evaluate_curve, evaluate_profile, CanonicalFamily, ClassifyOptions, CurveSamples, FamilyKind,
    Grid, Vec3,
};

fn sampled(n: usize, length: f64, f: impl Fn(f64) -> Vec3) -> awcurve::Result<CurveSamples> {
    let h = length / (n - 1) as f64;
    CurveSamples::new((0..n).map(|i| f(i as f64 * h)).collect(), 0.0, h)
}

fn main() -> awcurve::Result<()> {
    let grid = Grid::spanning(0.0, 2.0, 2001)?;
    for kind in [FamilyKind::Aw1Canonical, FamilyKind::WeakAw2Canonical] {
        let profile = canonical_profile(CanonicalFamily::standard(kind), grid)?;
        let mut eval = evaluate_profile(&profile, &ClassifyOptions::prescribed())?;
        eval.report.source = Some(format!("{kind:?}"));
        println!("{}", summary_table(&eval.report));
    }

    let circle = sampled(4001, std::f64::consts::TAU, |s| Vec3::new(s.cos(), s.sin(), 0.0))?;
    let mut eval = evaluate_curve(&circle, &ClassifyOptions::measured())?;
    eval.report.source = Some("unit circle".into());
    println!("{}", summary_table(&eval.report));

    let c = 2f64.sqrt();
    let helix = sampled(4001, 12.0, |s| Vec3::new((s / c).cos(), (s / c).sin(), s / c))?;
    let mut eval = evaluate_curve(&helix, &ClassifyOptions::measured())?;
    eval.report.source = Some("helix, radius 1, pitch 1".into());
    println!("{}", summary_table(&eval.report));
    Ok(())
}
