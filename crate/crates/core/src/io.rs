//! Point ingestion and tabular export.
//!
//! Points are read from CSV with (at least) the header columns `x,y,z`, or
//! from a JSON array of `[x, y, z]` triples. Any other CSV columns are
//! ignored, so the extended synthesis tables can be read back directly.
//! Numbers are written in shortest round-trip form.

use std::fmt::Write as _;
use std::path::Path;

use crate::aw::ResidualTable;
use crate::curve::CurveSamples;
use crate::error::{Error, Result};
use crate::frames::{BishopField, FrenetField};
use crate::profile::CurvatureProfile;
use crate::vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointFormat {
    Csv,
    Json,
}

impl PointFormat {
    /// `.json` selects JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => PointFormat::Json,
            _ => PointFormat::Csv,
        }
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn input_error(source: &str, message: impl Into<String>) -> Error {
    Error::Input { path: source.to_string(), message: message.into() }
}

fn parse_number(source: &str, row: usize, column: &str, text: &str) -> Result<f64> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| input_error(source, format!("row {row}: column `{column}`: invalid number `{text}`")))?;
    if !v.is_finite() {
        return Err(input_error(source, format!("row {row}: column `{column}`: non-finite value")));
    }
    Ok(v)
}

/// Reads a CSV table, returning the requested columns by header name.
fn read_columns(source: &str, text: &str, names: &[&str]) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| input_error(source, format!("invalid CSV header: {e}")))?.clone();
    let index: Vec<usize> = names
        .iter()
        .map(|name| {
            headers
                .iter()
                .position(|h| h.trim() == *name)
                .ok_or_else(|| input_error(source, format!("missing CSV column `{name}`")))
        })
        .collect::<Result<_>>()?;
    let mut columns = vec![Vec::new(); names.len()];
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| input_error(source, format!("invalid CSV: {e}")))?;
        for (k, &i) in index.iter().enumerate() {
            let field = record
                .get(i)
                .ok_or_else(|| input_error(source, format!("row {}: missing field `{}`", row + 1, names[k])))?;
            columns[k].push(parse_number(source, row + 1, names[k], field)?);
        }
    }
    Ok(columns)
}

pub fn parse_points_csv(source: &str, text: &str) -> Result<Vec<Vec3>> {
    let c = read_columns(source, text, &["x", "y", "z"])?;
    Ok((0..c[0].len()).map(|i| Vec3::new(c[0][i], c[1][i], c[2][i])).collect())
}

pub fn parse_points_json(source: &str, text: &str) -> Result<Vec<Vec3>> {
    let raw: Vec<[f64; 3]> = serde_json::from_str(text)
        .map_err(|e| input_error(source, format!("expected a JSON array of [x, y, z] triples: {e}")))?;
    Ok(raw.into_iter().map(Vec3::from).collect())
}

/// Rejects inputs with fewer than two distinct points.
pub fn check_points(source: &str, points: &[Vec3]) -> Result<()> {
    let distinct = points.windows(2).any(|w| w[0] != w[1]);
    if points.len() < 2 || !distinct {
        return Err(input_error(source, format!("fewer than 2 distinct points ({} read)", points.len())));
    }
    Ok(())
}

pub fn read_points(path: &Path, format: Option<PointFormat>) -> Result<Vec<Vec3>> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| input_error(&source, e.to_string()))?;
    let points = match format.unwrap_or_else(|| PointFormat::from_path(path)) {
        PointFormat::Csv => parse_points_csv(&source, &text)?,
        PointFormat::Json => parse_points_json(&source, &text)?,
    };
    check_points(&source, &points)?;
    Ok(points)
}

/// Tabulated profile columns `s` plus the two named channels.
pub fn parse_profile_csv(source: &str, text: &str, names: [&str; 2]) -> Result<[Vec<f64>; 3]> {
    let mut c = read_columns(source, text, &["s", names[0], names[1]])?;
    let b = c.pop().expect("three columns");
    let a = c.pop().expect("three columns");
    let s = c.pop().expect("three columns");
    Ok([s, a, b])
}

/// The header of a CSV table, used to detect profile kinds.
pub fn csv_headers(source: &str, text: &str) -> Result<Vec<String>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| input_error(source, format!("invalid CSV header: {e}")))?;
    Ok(headers.iter().map(|h| h.trim().to_string()).collect())
}

struct Table {
    out: String,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        let mut out = header.join(",");
        out.push('\n');
        Self { out }
    }

    fn row(&mut self, cells: impl IntoIterator<Item = Option<f64>>) {
        let mut first = true;
        for cell in cells {
            if !first {
                self.out.push(',');
            }
            first = false;
            if let Some(v) = cell {
                self.out.push_str(&fmt_f64(v));
            }
        }
        self.out.push('\n');
    }
}

fn vec_cells(v: Option<Vec3>) -> [Option<f64>; 3] {
    match v {
        Some(v) => [Some(v.x), Some(v.y), Some(v.z)],
        None => [None; 3],
    }
}

pub fn points_csv(points: &[Vec3]) -> String {
    let mut t = Table::new(&["x", "y", "z"]);
    for p in points {
        t.row(vec_cells(Some(*p)));
    }
    t.out
}

pub fn points_json(points: &[Vec3]) -> String {
    let mut out = String::from("[\n");
    for (i, p) in points.iter().enumerate() {
        let sep = if i + 1 == points.len() { "" } else { "," };
        let _ = writeln!(out, "  [{}, {}, {}]{sep}", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(p.z));
    }
    out.push_str("]\n");
    out
}

pub const EXTENDED_HEADER: [&str; 15] =
    ["s", "x", "y", "z", "Tx", "Ty", "Tz", "M1x", "M1y", "M1z", "M2x", "M2y", "M2z", "k1", "k2"];

/// Curve plus Bishop frame: `s,x,y,z,Tx,Ty,Tz,M1x,M1y,M1z,M2x,M2y,M2z,k1,k2`.
pub fn extended_csv(curve: &CurveSamples, frame: &BishopField) -> String {
    let mut t = Table::new(&EXTENDED_HEADER);
    for (i, p) in curve.points().iter().enumerate() {
        let mut cells = vec![Some(curve.grid().s(i))];
        cells.extend(vec_cells(Some(*p)));
        cells.extend(vec_cells(Some(frame.tangent[i])));
        cells.extend(vec_cells(Some(frame.m1[i])));
        cells.extend(vec_cells(Some(frame.m2[i])));
        cells.extend([Some(frame.k1[i]), Some(frame.k2[i])]);
        t.row(cells);
    }
    t.out
}

pub const FRAME_HEADER: [&str; 25] = [
    "s",
    "x",
    "y",
    "z",
    "Tx",
    "Ty",
    "Tz",
    "Nx",
    "Ny",
    "Nz",
    "Bx",
    "By",
    "Bz",
    "kappa",
    "tau",
    "M1x",
    "M1y",
    "M1z",
    "M2x",
    "M2y",
    "M2z",
    "k1",
    "k2",
    "theta",
    "frenet_defined",
];

/// Frenet and Bishop channels side by side; undefined Frenet entries are empty.
pub fn frame_csv(curve: &CurveSamples, frenet: &FrenetField, bishop: &BishopField) -> String {
    let mut t = Table::new(&FRAME_HEADER);
    for (i, p) in curve.points().iter().enumerate() {
        let mut cells = vec![Some(curve.grid().s(i))];
        cells.extend(vec_cells(Some(*p)));
        cells.extend(vec_cells(Some(frenet.tangent[i])));
        cells.extend(vec_cells(frenet.normal[i]));
        cells.extend(vec_cells(frenet.binormal[i]));
        cells.extend([Some(frenet.kappa[i]), frenet.tau[i]]);
        cells.extend(vec_cells(Some(bishop.m1[i])));
        cells.extend(vec_cells(Some(bishop.m2[i])));
        cells.extend([Some(bishop.k1[i]), Some(bishop.k2[i])]);
        cells.push(bishop.theta_defined[i].then_some(bishop.theta[i]));
        cells.push(Some(if frenet.frenet_defined(i) { 1.0 } else { 0.0 }));
        t.row(cells);
    }
    t.out
}

pub const PROFILE_HEADER: [&str; 6] = ["s", "kappa", "tau", "theta", "k1", "k2"];

/// Both curvature descriptions per sample; undefined entries are empty.
pub fn profile_csv(profile: &CurvatureProfile) -> String {
    let mut t = Table::new(&PROFILE_HEADER);
    for i in 0..profile.len() {
        let (kappa, tau, theta) = match &profile.frenet {
            Some(f) => (Some(f.kappa[i]), f.tau[i], f.theta[i]),
            None => (None, None, None),
        };
        let (k1, k2) = match &profile.bishop {
            Some(b) => (Some(b.k1[i]), Some(b.k2[i])),
            None => (None, None),
        };
        t.row([Some(profile.grid.s(i)), kappa, tau, theta, k1, k2]);
    }
    t.out
}

/// `s` followed by one normalized residual column per condition.
pub fn residual_csv(table: &ResidualTable) -> String {
    let mut header = vec!["s"];
    header.extend(table.columns.iter().map(|(c, _)| c.name()));
    let mut t = Table::new(&header);
    for (i, s) in table.s.iter().enumerate() {
        let mut cells = vec![Some(*s)];
        cells.extend(table.columns.iter().map(|(_, col)| col[i]));
        t.row(cells);
    }
    t.out
}
