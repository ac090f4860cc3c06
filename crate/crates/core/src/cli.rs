//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input parse error, 3 numeric or
//! domain error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::aw::{
    evaluate_curve, evaluate_profile, ClassifyOptions, Evaluation, DEFAULT_EPS_GS, DEFAULT_EPS_NORM, DEFAULT_TRIM,
    SCHEMA_VERSION,
};
use crate::curve::{resample_arclength, Grid};
use crate::error::Error;
use crate::expr::{ScalarFunction, Tabulated};
use crate::frames::{bishop_frame, frenet_frame, DEFAULT_KAPPA_MIN};
use crate::io::{self, PointFormat};
use crate::profile::{bishop_to_frenet, frenet_to_bishop, CurvatureProfile, DEFAULT_DERIVATIVE_SPACING};
use crate::synthesis::{
    canonical_profile, synthesize_from_bishop, synthesize_from_frenet, CanonicalFamily, FamilyKind, InitialFrame,
    SynthesisSpec,
};
use crate::vec3::Vec3;

#[derive(Debug, Parser)]
#[command(name = "awcurve", version, about = "Frenet/Bishop frames, AW(k)-type classification and curve synthesis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resample a curve and write its Frenet and Bishop frames as CSV.
    Frame(FrameArgs),
    /// Convert between (kappa, tau, theta0) and (k1, k2).
    Convert(ConvertArgs),
    /// Evaluate the AW(k) conditions and write a JSON report.
    Classify(ClassifyArgs),
    /// Integrate a curve from prescribed curvatures.
    Synthesize(SynthesizeArgs),
    /// Classify and print a summary table.
    Report(ClassifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

impl From<InputFormat> for PointFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Csv => PointFormat::Csv,
            InputFormat::Json => PointFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveOutput {
    /// s, position, Bishop frame and curvatures.
    Extended,
    /// x,y,z only.
    Csv,
    /// Array of [x, y, z].
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// k1 = k2 = sign / (s + c)
    Aw1,
    /// k1 = -k2 = sign / (s + c)
    WeakAw2,
}

#[derive(Debug, Args)]
pub struct FrameArgs {
    /// Curve points (CSV with x,y,z header, or JSON array of triples).
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; inferred from the extension when absent.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Number of resampled points (default: number of input points).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_KAPPA_MIN)]
    pub kappa_min: f64,
    /// Seed for the first Bishop normal, as x,y,z.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    pub initial_normal: Option<Vec3>,
    /// Output path (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct CurvatureExprs {
    /// First Bishop curvature k1(s).
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<String>,
    /// Second Bishop curvature k2(s).
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<String>,
    /// Frenet curvature kappa(s).
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Torsion tau(s).
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    /// Development angle at s-start (with --kappa/--tau).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta0: f64,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_start: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub s_end: f64,
    #[arg(long, default_value_t = 2001)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Closed-form solution family instead of expressions.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub sign: f64,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub exprs: CurvatureExprs,
    /// Tabulated profile CSV with columns s,k1,k2 or s,kappa,tau.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_start: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub s_end: f64,
    /// Grid size (default 2001; for tabulated input the table's sample count).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_KAPPA_MIN)]
    pub kappa_min: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Curve files to classify (processed concurrently, reported in order).
    #[arg(long = "input", num_args = 1..)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Classify prescribed curvatures instead of curve files.
    #[command(flatten)]
    pub exprs: CurvatureExprs,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_start: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub s_end: f64,
    /// Samples: grid size for prescribed profiles, resampling count for
    /// curves (default: the number of input points).
    #[arg(long)]
    pub n: Option<usize>,
    /// Verdict threshold (default 1e-3 for curves, 1e-6 for prescribed profiles).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_KAPPA_MIN)]
    pub kappa_min: f64,
    /// Samples excluded at each end.
    #[arg(long, default_value_t = DEFAULT_TRIM)]
    pub trim: usize,
    /// Arc-length spacing of stencils for measured derivative channels.
    #[arg(long, default_value_t = DEFAULT_DERIVATIVE_SPACING)]
    pub derivative_spacing: f64,
    #[arg(long, default_value_t = DEFAULT_EPS_GS)]
    pub eps_gs: f64,
    #[arg(long, default_value_t = DEFAULT_EPS_NORM)]
    pub eps_norm: f64,
    /// Also report Bishop AW(2)/AW(3) with the literal `k1^2 k1` term.
    #[arg(long)]
    pub literal_forms: bool,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    pub initial_normal: Option<Vec3>,
    /// JSON report path (default: standard output for `classify`).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Per-sample residual CSV; with several inputs `NAME.csv` becomes `NAME.<i>.csv`.
    #[arg(long)]
    pub residuals: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    #[command(flatten)]
    pub exprs: CurvatureExprs,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    pub initial_position: Option<Vec3>,
    #[arg(long = "initial-t", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub initial_t: Option<Vec3>,
    #[arg(long = "initial-m1", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub initial_m1: Option<Vec3>,
    #[arg(long, value_enum, default_value_t = CurveOutput::Extended)]
    pub format: CurveOutput,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_vec3(text: &str) -> std::result::Result<Vec3, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z but got `{text}`"));
    }
    let mut v = [0.0f64; 3];
    for (slot, part) in v.iter_mut().zip(parts) {
        *slot = part.parse().map_err(|_| format!("invalid number `{part}`"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite number `{part}`"));
        }
    }
    Ok(Vec3::from(v))
}

/// A failed run: message plus process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }

    fn from_core(context: &str, e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Input { .. } | Error::Io(_) => 2,
            Error::InvalidParameter(_) => 1,
            _ => 3,
        };
        let message = if context.is_empty() { e.to_string() } else { format!("{context}: {e}") };
        Self { code, message }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

trait Context<T> {
    fn context(self, what: &str) -> CliResult<T>;
}

impl<T> Context<T> for crate::error::Result<T> {
    fn context(self, what: &str) -> CliResult<T> {
        self.map_err(|e| CliError::from_core(what, e))
    }
}

fn parse_expr(option: &str, text: &str) -> CliResult<ScalarFunction> {
    ScalarFunction::parse(text).context(option)
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut String) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError { code: 2, message: format!("{}: {e}", p.display()) }),
        None => {
            stdout.push_str(text);
            Ok(())
        }
    }
}

enum Curvatures {
    Bishop(ScalarFunction, ScalarFunction),
    Frenet(ScalarFunction, ScalarFunction, f64),
}

fn curvatures(exprs: &CurvatureExprs) -> CliResult<Option<Curvatures>> {
    let bishop = exprs.k1.is_some() || exprs.k2.is_some();
    let frenet = exprs.kappa.is_some() || exprs.tau.is_some();
    match (bishop, frenet) {
        (true, true) => Err(CliError::usage("give either --k1/--k2 or --kappa/--tau, not both")),
        (true, false) => {
            let (Some(k1), Some(k2)) = (&exprs.k1, &exprs.k2) else {
                return Err(CliError::usage("--k1 and --k2 must be given together"));
            };
            Ok(Some(Curvatures::Bishop(parse_expr("--k1", k1)?, parse_expr("--k2", k2)?)))
        }
        (false, true) => {
            let (Some(kappa), Some(tau)) = (&exprs.kappa, &exprs.tau) else {
                return Err(CliError::usage("--kappa and --tau must be given together"));
            };
            Ok(Some(Curvatures::Frenet(parse_expr("--kappa", kappa)?, parse_expr("--tau", tau)?, exprs.theta0)))
        }
        (false, false) => Ok(None),
    }
}

fn family(args: &FamilyArgs) -> CliResult<Option<CanonicalFamily>> {
    let Some(kind) = args.family else { return Ok(None) };
    let kind = match kind {
        FamilyArg::Aw1 => FamilyKind::Aw1Canonical,
        FamilyArg::WeakAw2 => FamilyKind::WeakAw2Canonical,
    };
    CanonicalFamily::new(kind, args.c, args.sign).map(Some).context("--family")
}

fn run_frame(args: &FrameArgs, stdout: &mut String) -> CliResult<()> {
    let points = io::read_points(&args.input, args.format.map(Into::into)).context("")?;
    let source = args.input.display().to_string();
    let curve = resample_arclength(&points, args.n.unwrap_or(points.len())).context(&source)?;
    let frenet = frenet_frame(&curve, args.kappa_min).context(&source)?;
    let bishop = bishop_frame(&curve, args.initial_normal, args.kappa_min).context(&source)?;
    write_output(args.output.as_deref(), &io::frame_csv(&curve, &frenet, &bishop), stdout)
}

#[derive(Serialize)]
struct ProfileDocument<'a> {
    schema_version: &'static str,
    s: Vec<f64>,
    kappa: Vec<f64>,
    tau: &'a [Option<f64>],
    theta: &'a [Option<f64>],
    k1: &'a [f64],
    k2: &'a [f64],
}

fn profile_json(profile: &CurvatureProfile) -> CliResult<String> {
    let (Some(f), Some(b)) = (&profile.frenet, &profile.bishop) else {
        return Err(CliError { code: 3, message: "profile is incomplete".into() });
    };
    let doc = ProfileDocument {
        schema_version: SCHEMA_VERSION,
        s: profile.grid.values().collect(),
        kappa: f.kappa.clone(),
        tau: &f.tau,
        theta: &f.theta,
        k1: &b.k1,
        k2: &b.k2,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("profile serializes");
    text.push('\n');
    Ok(text)
}

fn tabulated_profile(path: &Path, kappa_min: f64, theta0: f64) -> CliResult<CurvatureProfile> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError { code: 2, message: format!("{source}: {e}") })?;
    let headers = io::csv_headers(&source, &text).context("")?;
    let has = |name: &str| headers.iter().any(|h| h == name);
    let bishop = has("k1") && has("k2");
    let names = if bishop { ["k1", "k2"] } else { ["kappa", "tau"] };
    let [s, a, b] = io::parse_profile_csv(&source, &text, names).context("")?;
    let n = s.len();
    if n < 2 {
        return Err(CliError { code: 2, message: format!("{source}: need at least 2 rows") });
    }
    let grid = Grid::spanning(s[0], s[n - 1], n).context(&source)?;
    let step_ok = s.windows(2).all(|w| ((w[1] - w[0]) - grid.h).abs() <= 1e-9 * grid.h.max(1.0));
    if !step_ok {
        return Err(CliError { code: 2, message: format!("{source}: column `s` must be uniformly spaced") });
    }
    let fa = ScalarFunction::Tabulated(Tabulated::new(&s, &a).context(&source)?);
    let fb = ScalarFunction::Tabulated(Tabulated::new(&s, &b).context(&source)?);
    if bishop {
        let p = CurvatureProfile::from_bishop_functions(&fa, &fb, grid).context(&source)?;
        bishop_to_frenet(&p, kappa_min).context(&source)
    } else {
        frenet_to_bishop(&fa, &fb, theta0, grid).context(&source)
    }
}

fn run_convert(args: &ConvertArgs, stdout: &mut String) -> CliResult<()> {
    let given = curvatures(&args.exprs)?;
    let profile = match (given, &args.input) {
        (Some(_), Some(_)) => return Err(CliError::usage("give either --input or curvature expressions, not both")),
        (None, None) => return Err(CliError::usage("convert needs --k1/--k2, --kappa/--tau or --input")),
        (None, Some(path)) => tabulated_profile(path, args.kappa_min, args.exprs.theta0)?,
        (Some(c), None) => {
            let grid = Grid::spanning(args.s_start, args.s_end, args.n.unwrap_or(2001)).context("grid")?;
            match c {
                Curvatures::Bishop(k1, k2) => {
                    let p = CurvatureProfile::from_bishop_functions(&k1, &k2, grid).context("")?;
                    bishop_to_frenet(&p, args.kappa_min).context("")?
                }
                Curvatures::Frenet(kappa, tau, theta0) => frenet_to_bishop(&kappa, &tau, theta0, grid).context("")?,
            }
        }
    };
    let text = match args.format {
        TableFormat::Csv => io::profile_csv(&profile),
        TableFormat::Json => profile_json(&profile)?,
    };
    write_output(args.output.as_deref(), &text, stdout)
}

fn classify_options(args: &ClassifyArgs, measured: bool) -> CliResult<ClassifyOptions> {
    let default_tol = if measured { crate::aw::DEFAULT_TOL_MEASURED } else { crate::aw::DEFAULT_TOL_PRESCRIBED };
    let tol = args.tol.unwrap_or(default_tol);
    if !(tol > 0.0) {
        return Err(CliError::usage(format!("--tol must be positive, got {tol}")));
    }
    if !(args.kappa_min >= 0.0) {
        return Err(CliError::usage("--kappa-min must be non-negative"));
    }
    let mut opts = ClassifyOptions::with_tol(tol).kappa_min(args.kappa_min);
    opts.trim = args.trim;
    opts.residual.eps_gs = args.eps_gs;
    opts.residual.eps_norm = args.eps_norm;
    opts.residual.literal_forms = args.literal_forms;
    opts.measure.derivative_spacing = args.derivative_spacing;
    opts.measure.initial_normal = args.initial_normal;
    Ok(opts)
}

fn evaluate_file(path: &Path, args: &ClassifyArgs, opts: &ClassifyOptions) -> CliResult<Evaluation> {
    let source = path.display().to_string();
    let points = io::read_points(path, args.format.map(Into::into)).context("")?;
    let curve = resample_arclength(&points, args.n.unwrap_or(points.len())).context(&source)?;
    let mut eval = evaluate_curve(&curve, opts).context(&source)?;
    eval.report.source = Some(source);
    Ok(eval)
}

/// Runs the classification for either curve files or a prescribed profile.
fn evaluations(args: &ClassifyArgs) -> CliResult<Vec<Evaluation>> {
    let given = curvatures(&args.exprs)?;
    let fam = family(&args.family)?;
    let prescribed = given.is_some() as usize + fam.is_some() as usize;
    if prescribed > 1 {
        return Err(CliError::usage("give either curvature expressions or --family, not both"));
    }
    if prescribed == 1 && !args.inputs.is_empty() {
        return Err(CliError::usage("give either --input files or a prescribed profile, not both"));
    }
    if prescribed == 0 && args.inputs.is_empty() {
        return Err(CliError::usage("classify needs --input, curvature expressions or --family"));
    }

    if prescribed == 1 {
        let opts = classify_options(args, false)?;
        let grid = Grid::spanning(args.s_start, args.s_end, args.n.unwrap_or(2001)).context("grid")?;
        let (profile, source) = match (given, fam) {
            (_, Some(f)) => (canonical_profile(f, grid).context("--family")?, "family".to_string()),
            (Some(Curvatures::Bishop(k1, k2)), None) => {
                (CurvatureProfile::from_bishop_functions(&k1, &k2, grid).context("")?, "expressions".to_string())
            }
            (Some(Curvatures::Frenet(kappa, tau, theta0)), None) => {
                (frenet_to_bishop(&kappa, &tau, theta0, grid).context("")?, "expressions".to_string())
            }
            (None, None) => unreachable!("checked above"),
        };
        let mut eval = evaluate_profile(&profile, &opts).context(&source)?;
        eval.report.source = Some(source);
        return Ok(vec![eval]);
    }

    let opts = classify_options(args, true)?;
    let results: Vec<CliResult<Evaluation>> = std::thread::scope(|scope| {
        let handles: Vec<_> = args.inputs.iter().map(|path| scope.spawn(|| evaluate_file(path, args, &opts))).collect();
        handles.into_iter().map(|h| h.join().expect("classification thread panicked")).collect()
    });
    results.into_iter().collect()
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema_version: &'static str,
    reports: Vec<&'a crate::aw::AwReport>,
}

fn residual_path(base: &Path, index: usize, count: usize) -> PathBuf {
    if count == 1 {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}.{index}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{index}"),
    };
    base.with_file_name(name)
}

fn emit_reports(args: &ClassifyArgs, evals: &[Evaluation], stdout: Option<&mut String>) -> CliResult<()> {
    let doc = ReportDocument { schema_version: SCHEMA_VERSION, reports: evals.iter().map(|e| &e.report).collect() };
    let mut json = serde_json::to_string_pretty(&doc).expect("report serializes");
    json.push('\n');
    match (&args.output, stdout) {
        (Some(path), _) => {
            std::fs::write(path, json).map_err(|e| CliError { code: 2, message: format!("{}: {e}", path.display()) })?
        }
        (None, Some(out)) => out.push_str(&json),
        (None, None) => {}
    }
    if let Some(base) = &args.residuals {
        for (i, eval) in evals.iter().enumerate() {
            let path = residual_path(base, i, evals.len());
            std::fs::write(&path, io::residual_csv(&eval.table))
                .map_err(|e| CliError { code: 2, message: format!("{}: {e}", path.display()) })?;
        }
    }
    Ok(())
}

/// Human-readable summary of one report.
pub fn summary_table(report: &crate::aw::AwReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source: {}", report.source.as_deref().unwrap_or("-"));
    let _ = writeln!(
        out,
        "tol {}  kappa_min {}  samples {}  evaluated [{}, {})",
        report.tol, report.kappa_min, report.samples, report.trimmed_range.start, report.trimmed_range.end
    );
    let _ = writeln!(out, "{:<20} {:>14}  {:<7} degenerate", "condition", "residual", "verdict");
    for c in &report.conditions {
        let residual = c.residual.map_or_else(|| "n/a".to_string(), |r| format!("{r:.6e}"));
        let verdict = if c.verdict { "pass" } else { "fail" };
        let degenerate = if c.degenerate { "yes" } else { "no" };
        let _ = writeln!(out, "{:<20} {:>14}  {:<7} {}", c.condition.name(), residual, verdict, degenerate);
    }
    out
}

fn run_synthesize(args: &SynthesizeArgs, stdout: &mut String) -> CliResult<()> {
    let given = curvatures(&args.exprs)?;
    let fam = family(&args.family)?;
    let mut initial = InitialFrame::default();
    if let Some(p) = args.initial_position {
        initial.position = p;
    }
    if let Some(t) = args.initial_t {
        initial.tangent = t;
    }
    if let Some(m) = args.initial_m1 {
        initial.m1 = m;
    }
    let r = &args.range;
    let out = match (given, fam) {
        (Some(_), Some(_)) => return Err(CliError::usage("give either curvature expressions or --family, not both")),
        (None, None) => return Err(CliError::usage("synthesize needs --k1/--k2, --kappa/--tau or --family")),
        (None, Some(f)) => {
            let spec = SynthesisSpec::from_family(f, r.s_start, r.s_end, r.n).with_initial(initial);
            synthesize_from_bishop(&spec).context("")?
        }
        (Some(Curvatures::Bishop(k1, k2)), None) => {
            let spec = SynthesisSpec::new(k1, k2, r.s_start, r.s_end, r.n).with_initial(initial);
            synthesize_from_bishop(&spec).context("")?
        }
        (Some(Curvatures::Frenet(kappa, tau, theta0)), None) => {
            if r.n < 9 {
                return Err(CliError::usage("--n must be at least 9"));
            }
            let grid = Grid::spanning(r.s_start, r.s_end, r.n).context("")?;
            synthesize_from_frenet(&kappa, &tau, theta0, grid, &initial).context("")?
        }
    };
    let text = match args.format {
        CurveOutput::Extended => io::extended_csv(&out.curve, &out.frame),
        CurveOutput::Csv => io::points_csv(out.curve.points()),
        CurveOutput::Json => io::points_json(out.curve.points()),
    };
    write_output(args.output.as_deref(), &text, stdout)
}

/// Executes one command; text destined for standard output is returned.
pub fn run(cli: &Cli) -> CliResult<String> {
    let mut stdout = String::new();
    match &cli.command {
        Command::Frame(a) => run_frame(a, &mut stdout)?,
        Command::Convert(a) => run_convert(a, &mut stdout)?,
        Command::Synthesize(a) => run_synthesize(a, &mut stdout)?,
        Command::Classify(a) => {
            let evals = evaluations(a)?;
            emit_reports(a, &evals, Some(&mut stdout))?;
        }
        Command::Report(a) => {
            let evals = evaluations(a)?;
            emit_reports(a, &evals, None)?;
            for e in &evals {
                stdout.push_str(&summary_table(&e.report));
            }
        }
    }
    Ok(stdout)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(e.to_string()),
                _ => Err(CliError::usage(e.to_string())),
            };
        }
    };
    run(&cli)
}

pub fn main() -> ExitCode {
    match run_from_args(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("awcurve: {}", e.message.trim_end());
            ExitCode::from(e.code)
        }
    }
}
