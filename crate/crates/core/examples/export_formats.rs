//! Write every table and document the command-line tool emits, using the
//! library directly. Output goes to the directory given as the first
//! argument, or to a fresh directory under the system temp dir.

use std::path::PathBuf;

use awcurve::aw::SCHEMA_VERSION;
use awcurve::io;
use awcurve::{
    bishop_frame, bishop_to_frenet, evaluate_curve, frenet_frame, synthesize_from_bishop, CanonicalFamily,
    ClassifyOptions, FamilyKind, SynthesisSpec, DEFAULT_KAPPA_MIN,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir =
        std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("awcurve-export"));
    std::fs::create_dir_all(&dir)?;

    let family = CanonicalFamily::standard(FamilyKind::Aw1Canonical);
    let out = synthesize_from_bishop(&SynthesisSpec::from_family(family, 0.0, 2.0, 1001))?;
    let frenet = frenet_frame(&out.curve, DEFAULT_KAPPA_MIN)?;
    let bishop = bishop_frame(&out.curve, None, DEFAULT_KAPPA_MIN)?;
    let eval = evaluate_curve(&out.curve, &ClassifyOptions::measured())?;
    let profile = bishop_to_frenet(&eval_profile(&out)?, DEFAULT_KAPPA_MIN)?;

    let report = serde_json::json!({ "schema_version": SCHEMA_VERSION, "reports": [eval.report] });
    let files = [
        ("points.csv", io::points_csv(out.curve.points())),
        ("points.json", io::points_json(out.curve.points())),
        ("synthesized.csv", io::extended_csv(&out.curve, &out.frame)),
        ("frames.csv", io::frame_csv(&out.curve, &frenet, &bishop)),
        ("profile.csv", io::profile_csv(&profile)),
        ("residuals.csv", io::residual_csv(&eval.table)),
        ("report.json", serde_json::to_string_pretty(&report)? + "\n"),
    ];
    for (name, text) in files {
        let path = dir.join(name);
        std::fs::write(&path, &text)?;
        let header = text.lines().next().unwrap_or("");
        println!("{:<44} {:>6} lines  {}", path.display(), text.lines().count(), truncate(header, 60));
    }
    Ok(())
}

fn eval_profile(out: &awcurve::Synthesized) -> awcurve::Result<awcurve::CurvatureProfile> {
    let (k1, k2) = CanonicalFamily::standard(FamilyKind::Aw1Canonical).functions();
    awcurve::CurvatureProfile::from_bishop_functions(&k1, &k2, out.curve.grid())
}

fn truncate(s: &str, n: usize) -> String {
    if s.len() <= n {
        s.to_string()
    } else {
        format!("{}...", &s[..n])
    }
}
