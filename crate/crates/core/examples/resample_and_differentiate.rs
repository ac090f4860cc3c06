//! Resample an unevenly sampled quarter circle at equal arc length, then
//! estimate derivatives with the order-4 stencils.

use awcurve::{derivatives, resample_arclength, Vec3};
use std::f64::consts::FRAC_PI_2;

fn main() -> awcurve::Result<()> {
    let raw: Vec<Vec3> = (0..100)
        .map(|i| {
            let u = i as f64 / 99.0;
            let t = FRAC_PI_2 * (0.6 * u + 0.4 * u * u);
            Vec3::new(t.cos(), t.sin(), 0.0)
        })
        .collect();

    let curve = resample_arclength(&raw, 50)?;
    let gaps: Vec<f64> = curve.points().windows(2).map(|w| w[0].distance(w[1])).collect();
    let (lo, hi) = gaps.iter().fold((f64::MAX, 0.0f64), |(lo, hi), g| (lo.min(*g), hi.max(*g)));
    println!("arc-length step h = {:.12}", curve.h());
    println!("total length       = {:.12} (pi/2 = {:.12})", curve.h() * 49.0, FRAC_PI_2);
    println!("chord spread       = {:.3e}", hi - lo);

    let d = derivatives(&curve, 3)?;
    println!("\n  i   |g'|          |g''| (curvature)   g'''.g'");
    for i in (0..curve.len()).step_by(7) {
        println!("{i:>3}   {:.10}  {:.10}        {:+.2e}", d[0][i].norm(), d[1][i].norm(), d[2][i].dot(d[0][i]));
    }
    Ok(())
}
