//! Frenet and Bishop frames along a helix, and how they relate.
//!
//! The Bishop normals rotate against the Frenet normal at rate tau, so the
//! development angle grows linearly.

use awcurve::vec3::gram_deviation;
use awcurve::{bishop_frame, frenet_frame, CurveSamples, Vec3, DEFAULT_KAPPA_MIN};

fn main() -> awcurve::Result<()> {
    let (a, b) = (1.0f64, 0.5f64);
    let c = a.hypot(b);
    let n = 2001;
    let h = 10.0 / (n - 1) as f64;
    let points = (0..n)
        .map(|i| {
            let t = i as f64 * h / c;
            Vec3::new(a * t.cos(), a * t.sin(), b * t)
        })
        .collect();
    let curve = CurveSamples::new(points, 0.0, h)?;

    let frenet = frenet_frame(&curve, DEFAULT_KAPPA_MIN)?;
    let bishop = bishop_frame(&curve, None, DEFAULT_KAPPA_MIN)?;
    println!("exact kappa = {:.10}, tau = {:.10}", a / (c * c), b / (c * c));
    println!("\n     s   kappa         tau           k1           k2           theta");
    for i in (0..n).step_by(250) {
        println!(
            "{:>6.2}  {:.10}  {:.10}  {:+.8}  {:+.8}  {:+.6}",
            curve.grid().s(i),
            frenet.kappa[i],
            frenet.tau[i].unwrap(),
            bishop.k1[i],
            bishop.k2[i],
            bishop.theta[i]
        );
    }

    let gram = (0..n).map(|i| gram_deviation(bishop.tangent[i], bishop.m1[i], bishop.m2[i])).fold(0.0, f64::max);
    let rebuilt = (0..n)
        .map(|i| {
            let (s, c) = bishop.theta[i].sin_cos();
            (bishop.m1[i] * c + bishop.m2[i] * s).distance(frenet.normal[i].unwrap())
        })
        .fold(0.0, f64::max);
    let rate = (bishop.theta[n - 1] - bishop.theta[0]) / 10.0;
    println!("\nBishop Gram deviation          {gram:.2e}");
    println!("|cos(theta) M1 + sin(theta) M2 - N|  {rebuilt:.2e}");
    println!("mean d(theta)/ds = {rate:.10}");
    Ok(())
}
