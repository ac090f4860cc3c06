//! Curvature expressions: parsing, printing, evaluation and error reporting.

use awcurve::{Expr, ScalarFunction};

fn main() {
    for text in ["1/(s+1)", "-2*sin(3*s)^2 + exp(-s/4)", "sqrt(1 + s^2) * atan(s)", "-s^2"] {
        let e = Expr::parse(text).expect("valid expression");
        let values: Vec<String> = [0.0, 0.5, 2.0].iter().map(|s| format!("{:.6}", e.eval(*s).unwrap())).collect();
        println!("{text:<28} -> {e}");
        println!("{:<28}    f(0), f(0.5), f(2) = {}", "", values.join(", "));
    }

    println!();
    for bad in ["1/(s+", "2*", "foo(s)", "s s"] {
        match Expr::parse(bad) {
            Ok(e) => println!("{bad:<10} unexpectedly parsed as {e}"),
            Err(err) => println!("{bad:<10} {err}"),
        }
    }

    let pole = ScalarFunction::parse("1/(s-1)").unwrap();
    println!("\n1/(s-1) at s = 1: {}", pole.eval(1.0).unwrap_err());
    let log = ScalarFunction::parse("log(s)").unwrap();
    println!("log(s) at s = 0:  {}", log.eval(0.0).unwrap_err());
}
