//! Integrate a curve from prescribed Bishop curvatures, then measure it again.

use awcurve::profile::MeasureOptions;
use awcurve::{
    evaluate_curve, measure_curve, synthesize_from_bishop, AwCondition, ClassifyOptions, ScalarFunction, SynthesisSpec,
};

fn main() -> awcurve::Result<()> {
    let k1 = ScalarFunction::parse("1/(s+1)")?;
    let k2 = ScalarFunction::parse("1/(s+1)")?;
    let spec = SynthesisSpec::new(k1.clone(), k2.clone(), 0.0, 2.0, 2001);
    let out = synthesize_from_bishop(&spec)?;
    println!("largest re-orthonormalization correction: {:.2e}", out.max_correction);
    println!("end point: {:?}", out.curve.points().last().unwrap());

    let opts = MeasureOptions { initial_normal: Some(out.frame.m1[0]), ..Default::default() };
    let measured = measure_curve(&out.curve, &opts)?;
    let grid = out.curve.grid();
    let mut worst = 0.0f64;
    for i in 4..grid.n - 4 {
        let s = grid.s(i);
        worst = worst.max((measured.bishop.k1[i] - k1.eval(s)?).abs());
        worst = worst.max((measured.bishop.k2[i] - k2.eval(s)?).abs());
    }
    println!("measured vs prescribed k1, k2: {worst:.2e}");

    let mut classify = ClassifyOptions::measured();
    classify.measure = opts;
    let eval = evaluate_curve(&out.curve, &classify)?;
    for c in AwCondition::BISHOP {
        println!("{:<16} {:.3e}  {}", c.name(), eval.report.residual(c).unwrap(), eval.report.verdict(c));
    }
    Ok(())
}
