fn main() -> std::process::ExitCode {
    awcurve::cli::main()
}
