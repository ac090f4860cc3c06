//! Converting between (kappa, tau, theta0) and the Bishop curvatures (k1, k2).

use awcurve::{bishop_to_frenet, frenet_to_bishop, CurvatureProfile, Grid, ScalarFunction, DEFAULT_KAPPA_MIN};

fn main() -> awcurve::Result<()> {
    let grid = Grid::spanning(0.0, 4.0 * std::f64::consts::PI, 401)?;
    let kappa = ScalarFunction::parse("1 + 0.25*sin(s)")?;
    let tau = ScalarFunction::parse("0.5")?;

    let bishop = frenet_to_bishop(&kappa, &tau, 0.3, grid)?;
    let b = bishop.bishop()?;
    println!("   s       k1          k2          hypot");
    for i in (0..grid.n).step_by(50) {
        println!("{:>6.3}  {:+.8}  {:+.8}  {:.8}", grid.s(i), b.k1[i], b.k2[i], b.k1[i].hypot(b.k2[i]));
    }

    // Forget the Frenet side and rebuild it from (k1, k2) alone.
    let bishop_only = CurvatureProfile { frenet: None, ..bishop };
    let back = bishop_to_frenet(&bishop_only, DEFAULT_KAPPA_MIN)?;
    let f = back.frenet()?;
    let mut worst = (0.0f64, 0.0f64);
    for (i, s) in grid.values().enumerate() {
        worst.0 = worst.0.max((f.kappa[i] - kappa.eval(s)?).abs());
        worst.1 = worst.1.max((f.tau[i].unwrap() - 0.5).abs());
    }
    println!("\nround trip: max |dkappa| = {:.2e}, max |dtau| = {:.2e}", worst.0, worst.1);
    println!("theta(0) = {:.12}", f.theta[0].unwrap());
    Ok(())
}
