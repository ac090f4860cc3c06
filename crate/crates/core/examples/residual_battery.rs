//! Per-sample residuals of the Bishop battery, including the degenerate
//! flags and the literal printed forms of the AW(2)/AW(3) conditions.

use awcurve::aw::{bishop_aw_residuals, ResidualOptions};
use awcurve::{CurvatureProfile, Grid, ScalarFunction};

fn main() -> awcurve::Result<()> {
    let grid = Grid::spanning(0.0, 3.0, 301)?;
    let k1 = ScalarFunction::parse("1/(s+1)")?;
    let k2 = ScalarFunction::parse("-1/(s+1)")?;
    let profile = CurvatureProfile::from_bishop_functions(&k1, &k2, grid)?;
    let opts = ResidualOptions { literal_forms: true, ..Default::default() };
    let fields = bishop_aw_residuals(&profile, &opts)?;

    print!("   s  ");
    for f in &fields {
        print!(" {:>18}", f.condition.name());
    }
    println!();
    for i in (0..grid.n).step_by(25) {
        print!("{:>5.2} ", grid.s(i));
        for f in &fields {
            let flag = if f.degenerate[i] { "*" } else { " " };
            print!(" {:>17.3e}{flag}", f.normalized[i].unwrap());
        }
        println!();
    }
    println!("\n* degenerate sample (a starred vector is undefined)");

    let constant =
        CurvatureProfile::from_bishop_functions(&ScalarFunction::constant(1.0), &ScalarFunction::constant(0.0), grid)?;
    for f in bishop_aw_residuals(&constant, &ResidualOptions::default())? {
        let worst = f.normalized.iter().flatten().fold(0.0f64, |a, b| a.max(*b));
        let degenerate = f.degenerate.iter().filter(|d| **d).count();
        println!("circle  {:<16} sup {:.3e}  degenerate samples {degenerate}", f.condition.name(), worst);
    }
    Ok(())
}
