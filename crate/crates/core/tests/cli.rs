use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn awcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awcurve")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = awcurve(args);
    assert!(out.status.success(), "{args:?} failed: {}", stderr(&out));
    stdout(&out)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

fn assert_valid(schema_name: &str, text: &str) -> Value {
    let value: Value = serde_json::from_str(text).unwrap();
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
    value
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_helix(dir: &Path, name: &str, n: usize) -> PathBuf {
    let path = dir.join(name);
    let mut text = String::from("x,y,z\n");
    for i in 0..n {
        let t = 6.0 * i as f64 / (n - 1) as f64;
        text += &format!("{},{},{}\n", t.cos(), t.sin(), 0.5 * t);
    }
    std::fs::write(&path, text).unwrap();
    path
}

fn condition<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["conditions"].as_array().unwrap().iter().find(|c| c["condition"] == name).unwrap()
}

#[test]
fn synthesized_canonical_curve_classifies_as_aw1() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("curve.csv");
    let residuals = dir.path().join("residuals.csv");
    ok(&[
        "synthesize",
        "--k1",
        "1/(s+1)",
        "--k2",
        "1/(s+1)",
        "--s-start",
        "0",
        "--s-end",
        "2",
        "--n",
        "2001",
        "--output",
        path_str(&curve),
    ]);
    let json = ok(&["classify", "--input", path_str(&curve), "--residuals", path_str(&residuals)]);
    let doc = assert_valid("aw_report.schema.json", &json);
    let report = &doc["reports"][0];
    assert_eq!(report["provenance"], "measured-from-curve");
    assert_eq!(report["tol"], 1e-3);
    assert_eq!(condition(report, "bishop-aw1")["verdict"], true);

    let table = std::fs::read_to_string(&residuals).unwrap();
    let header: Vec<&str> = table.lines().next().unwrap().split(',').collect();
    assert_eq!(header[0], "s");
    assert_eq!(header.len(), 11);
    assert!(header.contains(&"bishop-aw1") && header.contains(&"frenet-weak-aw2"));
    assert_eq!(table.lines().count(), 2002);
}

#[test]
fn convert_constant_bishop_curvatures() {
    let csv = ok(&["convert", "--k1", "3", "--k2", "4"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,kappa,tau,theta,k1,k2"));
    let mut rows = 0;
    for line in lines {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells[1], 5.0);
        assert!(cells[2].abs() < 1e-12);
        assert!((cells[3] - 4f64.atan2(3.0)).abs() < 1e-15);
        rows += 1;
    }
    assert_eq!(rows, 2001);
}

#[test]
fn convert_json_matches_schema() {
    let json = ok(&["convert", "--kappa", "0.5", "--tau", "0.5", "--n", "101", "--format", "json"]);
    let doc = assert_valid("profile.schema.json", &json);
    let k1 = doc["k1"].as_array().unwrap();
    assert_eq!(k1.len(), 101);
    assert_eq!(k1[0], 0.5);
}

#[test]
fn convert_reads_tabulated_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("profile.csv");
    let mut text = String::from("s,kappa,tau\n");
    for i in 0..201 {
        text += &format!("{},1,0.25\n", i as f64 * 0.01);
    }
    std::fs::write(&path, text).unwrap();
    let csv = ok(&["convert", "--input", path_str(&path)]);
    let last: Vec<f64> = csv.lines().last().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert!((last[0] - 2.0).abs() < 1e-12);
    assert!((last[3] - 0.5).abs() < 1e-12, "theta = {}", last[3]);
    assert!((last[4] - 0.5f64.cos()).abs() < 1e-12);
}

#[test]
fn single_point_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.csv");
    std::fs::write(&path, "x,y,z\n1,2,3\n").unwrap();
    let out = awcurve(&["classify", "--input", path_str(&path)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("one.csv") && err.contains("fewer than 2 distinct points"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(awcurve(&["classify", "--no-such-flag"]).status.code(), Some(1));
    assert_eq!(awcurve(&["convert", "--k1", "1"]).status.code(), Some(1));
    assert_eq!(awcurve(&["--help"]).status.code(), Some(0));

    let out = awcurve(&["convert", "--k1", "1/(s+", "--k2", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("--k1") && err.contains("offset 5"), "{err}");

    let out = awcurve(&["synthesize", "--k1", "1/(s-1)", "--k2", "0", "--n", "2001"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = awcurve(&["classify", "--family", "aw1", "--c", "-0.5"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn classify_is_deterministic_and_ordered() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_helix(dir.path(), "a.csv", 1500);
    let b = dir.path().join("b.csv");
    ok(&["synthesize", "--family", "weak-aw2", "--n", "1001", "--format", "csv", "--output", path_str(&b)]);
    let c = write_helix(dir.path(), "c.csv", 900);
    let args = ["classify", "--input", path_str(&a), path_str(&b), path_str(&c)];
    let first = ok(&args);
    let second = ok(&args);
    assert_eq!(first, second);
    let doc = assert_valid("aw_report.schema.json", &first);
    let sources: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["source"].as_str().unwrap()).collect();
    assert_eq!(sources, [path_str(&a), path_str(&b), path_str(&c)]);

    let res = dir.path().join("res.csv");
    ok(&["classify", "--input", path_str(&a), path_str(&c), "--residuals", path_str(&res)]);
    assert!(dir.path().join("res.0.csv").exists() && dir.path().join("res.1.csv").exists());
}

#[test]
fn prescribed_classification_uses_prescribed_tolerance() {
    let doc = assert_valid("aw_report.schema.json", &ok(&["classify", "--k1", "1/(s+1)", "--k2", "-1/(s+1)"]));
    let report = &doc["reports"][0];
    assert_eq!(report["provenance"], "prescribed");
    assert_eq!(report["tol"], 1e-6);
    assert_eq!(condition(report, "bishop-weak-aw2")["verdict"], true);

    // With k1 = -k2 the literal printed form no longer coincides with the corrected one.
    let doc = assert_valid("aw_report.schema.json", &ok(&["classify", "--family", "weak-aw2", "--literal-forms"]));
    let report = &doc["reports"][0];
    assert_eq!(condition(report, "bishop-aw1")["verdict"], true);
    assert!(condition(report, "bishop-aw2-literal")["residual"].as_f64().unwrap() > 0.0);
}

#[test]
fn frame_output_marks_undefined_frenet_samples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.json");
    let pts: Vec<[f64; 3]> = (0..50).map(|i| [i as f64 * 0.1, 2.0 * i as f64 * 0.1, 0.0]).collect();
    std::fs::write(&path, serde_json::to_string(&pts).unwrap()).unwrap();
    let csv = ok(&["frame", "--input", path_str(&path)]);
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let nx = header.iter().position(|h| *h == "Nx").unwrap();
    let defined = header.iter().position(|h| *h == "frenet_defined").unwrap();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), header.len());
        assert_eq!(cells[nx], "");
        assert_eq!(cells[defined], "0");
    }

    let helix = write_helix(dir.path(), "helix.csv", 400);
    let csv = ok(&["frame", "--input", path_str(&helix), "--n", "300", "--initial-normal", "0,0,1"]);
    assert_eq!(csv.lines().count(), 301);
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",1")));
}

#[test]
fn synthesize_formats() {
    let json = ok(&["synthesize", "--family", "aw1", "--n", "101", "--format", "json"]);
    let doc = assert_valid("points.schema.json", &json);
    assert_eq!(doc.as_array().unwrap().len(), 101);
    let csv = ok(&["synthesize", "--kappa", "1", "--tau", "0", "--n", "101", "--initial-position", "1,2,3"]);
    let header = csv.lines().next().unwrap();
    assert!(header.starts_with("s,x,y,z,Tx"));
    let first: Vec<f64> = csv.lines().nth(1).unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(&first[1..4], &[1.0, 2.0, 3.0]);
}

#[test]
fn report_prints_summary_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let text = ok(&["report", "--family", "aw1", "--output", path_str(&json)]);
    assert!(text.contains("condition") && text.contains("bishop-aw1"));
    assert_eq!(text.lines().filter(|l| l.contains("-aw")).count(), 10);
    assert_valid("aw_report.schema.json", &std::fs::read_to_string(json).unwrap());
}
