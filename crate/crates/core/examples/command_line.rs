//! Drive the command-line front end in-process; the same arguments work
//! with the `awcurve` binary.

use awcurve::cli::run_from_args;

fn main() {
    let runs: [&[&str]; 4] = [
        &["awcurve", "convert", "--k1", "3", "--k2", "4", "--n", "5"],
        &["awcurve", "report", "--family", "weak-aw2", "--n", "501"],
        &["awcurve", "classify", "--k1", "1/(s+", "--k2", "0"],
        &["awcurve", "synthesize", "--family", "aw1", "--c", "-1"],
    ];
    for args in runs {
        println!("$ {}", args.join(" "));
        match run_from_args(args.iter().copied()) {
            Ok(out) => print!("{out}"),
            Err(e) => println!("exit {}: {}", e.code, e.message),
        }
        println!();
    }
}
