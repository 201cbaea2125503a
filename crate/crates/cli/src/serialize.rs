//! On-disk formats and their readers.
//!
//! CSV carries decimal values at 12 significant digits with LF endings and
//! no locale formatting; JSON is pretty-printed serde output whose floats
//! round-trip exactly. Every writer here has a reader, and the CLI tests
//! feed each emitted file back through it.

use crate::CliError;
use cohex_core::{
    CurveTable, DiffGrid, GridSpec, SweepGrid, SweepMeta, SwellingCell, SwellingComponent,
    SwellingReport, Trajectory,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

/// Output encoding selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}, expected csv or json")),
        }
    }
}

/// One value as it appears in CSV output: 12 significant digits, plain
/// decimal notation while the exponent stays in [-4, 11], scientific
/// otherwise, and exact zero spelled out in full.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    let e = x.abs().log10().floor() as i32;
    if (-4..=11).contains(&e) {
        format!("{:.*}", (11 - e) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

/// Grid axes spelled out so a file stands on its own without re-deriving
/// coordinates from the spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axes {
    pub e_over_omega: Vec<f64>,
    pub omega_t: Vec<f64>,
}

impl Axes {
    fn from_spec(spec: &GridSpec) -> Self {
        Axes {
            e_over_omega: spec.e_coords(),
            omega_t: spec.t_coords(),
        }
    }
}

/// JSON document for one sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridDoc {
    pub spec: GridSpec,
    pub trajectory: Trajectory,
    pub axes: Axes,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub meta: SweepMeta,
}

impl GridDoc {
    pub fn from_grid(g: &SweepGrid) -> Self {
        GridDoc {
            spec: g.spec,
            trajectory: g.trajectory,
            axes: Axes::from_spec(&g.spec),
            values: g.values.clone(),
            errors: g.errors.clone(),
            meta: g.meta.clone(),
        }
    }

    pub fn into_grid(self) -> Result<SweepGrid, CliError> {
        self.spec
            .validate()
            .map_err(|e| CliError::Validation(format!("sweep document: {e}")))?;
        let cells = self.spec.cells();
        if self.values.len() != cells || self.errors.len() != cells {
            return Err(CliError::Validation(format!(
                "sweep document: {} values and {} errors for a {} cell grid",
                self.values.len(),
                self.errors.len(),
                cells
            )));
        }
        Ok(SweepGrid {
            spec: self.spec,
            trajectory: self.trajectory,
            values: self.values,
            errors: self.errors,
            meta: self.meta,
        })
    }
}

/// The two operand tags of a difference map, minuend − subtrahend.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffPair {
    pub minuend: String,
    pub subtrahend: String,
}

/// Flag metadata carried by difference maps; the operands own the rest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffMeta {
    pub flagged: Vec<[usize; 2]>,
}

/// JSON document for one difference map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffDoc {
    pub spec: GridSpec,
    pub trajectory: DiffPair,
    pub axes: Axes,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub meta: DiffMeta,
}

impl DiffDoc {
    pub fn from_diff(d: &DiffGrid) -> Self {
        DiffDoc {
            spec: d.spec,
            trajectory: DiffPair {
                minuend: d.minuend.clone(),
                subtrahend: d.subtrahend.clone(),
            },
            axes: Axes::from_spec(&d.spec),
            values: d.values.clone(),
            errors: d.errors.clone(),
            meta: DiffMeta {
                flagged: d.flagged.clone(),
            },
        }
    }

    pub fn into_diff(self) -> Result<DiffGrid, CliError> {
        self.spec
            .validate()
            .map_err(|e| CliError::Validation(format!("difference document: {e}")))?;
        let cells = self.spec.cells();
        if self.values.len() != cells || self.errors.len() != cells {
            return Err(CliError::Validation(format!(
                "difference document: {} values and {} errors for a {} cell grid",
                self.values.len(),
                self.errors.len(),
                cells
            )));
        }
        Ok(DiffGrid {
            spec: self.spec,
            minuend: self.trajectory.minuend,
            subtrahend: self.trajectory.subtrahend,
            values: self.values,
            errors: self.errors,
            flagged: self.meta.flagged,
        })
    }
}

/// JSON document for a swelling-region report, carrying enough of the
/// source difference map to interpret indices without it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionsDoc {
    pub spec: GridSpec,
    pub trajectory: DiffPair,
    pub threshold: f64,
    pub cells: Vec<SwellingCell>,
    pub components: Vec<SwellingComponent>,
}

impl RegionsDoc {
    pub fn new(d: &DiffGrid, report: SwellingReport) -> Self {
        RegionsDoc {
            spec: d.spec,
            trajectory: DiffPair {
                minuend: d.minuend.clone(),
                subtrahend: d.subtrahend.clone(),
            },
            threshold: report.threshold,
            cells: report.cells,
            components: report.components,
        }
    }
}

/// JSON document for a decoherence curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub e_over_omega: f64,
    pub omega_t: Vec<f64>,
    pub trajectories: Vec<Trajectory>,
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    pub meta: SweepMeta,
}

impl CurveDoc {
    pub fn from_table(t: &CurveTable) -> Self {
        CurveDoc {
            e_over_omega: t.e_bar,
            omega_t: t.t_samples.clone(),
            trajectories: t.trajectories.clone(),
            values: t.values.clone(),
            errors: t.errors.clone(),
            meta: t.meta.clone(),
        }
    }
}

/// Single-point record written by `compute --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub e_over_omega: f64,
    pub omega_t: f64,
    pub trajectory: Trajectory,
    pub c_over_g: f64,
    pub err_estimate: f64,
    pub method: String,
}

pub fn grid_csv(doc: &GridDoc) -> String {
    let mut s = String::from("e_over_omega,omega_t,c_over_g,err\n");
    grid_rows(&mut s, &doc.axes, &doc.values, &doc.errors);
    s
}

pub fn diff_csv(doc: &DiffDoc) -> String {
    let mut s = String::from("e_over_omega,omega_t,dc_over_g,err\n");
    grid_rows(&mut s, &doc.axes, &doc.values, &doc.errors);
    s
}

fn grid_rows(s: &mut String, axes: &Axes, values: &[f64], errors: &[f64]) {
    let n_t = axes.omega_t.len();
    for (i, &e) in axes.e_over_omega.iter().enumerate() {
        for (j, &t) in axes.omega_t.iter().enumerate() {
            let k = i * n_t + j;
            let _ = writeln!(
                s,
                "{},{},{},{}",
                format_value(e),
                format_value(t),
                format_value(values[k]),
                format_value(errors[k])
            );
        }
    }
}

/// Curve CSV: `omega_t` then one column per trajectory tag, errors carried
/// only by the JSON form.
pub fn curve_csv(doc: &CurveDoc) -> String {
    let mut s = String::from("omega_t");
    for traj in &doc.trajectories {
        s.push(',');
        s.push_str(&traj.tag());
    }
    s.push('\n');
    let n_cols = doc.trajectories.len();
    for (k, &t) in doc.omega_t.iter().enumerate() {
        s.push_str(&format_value(t));
        for col in 0..n_cols {
            s.push(',');
            s.push_str(&format_value(doc.values[k * n_cols + col]));
        }
        s.push('\n');
    }
    s
}

/// Regions CSV: the detected cells with their component index.
pub fn regions_csv(doc: &RegionsDoc) -> String {
    let mut s = String::from("component,i,j,e_over_omega,omega_t,dc_over_g\n");
    for (ci, comp) in doc.components.iter().enumerate() {
        for &[i, j] in &comp.cells {
            let cell = doc
                .cells
                .iter()
                .find(|c| c.i == i && c.j == j)
                .expect("component member missing from cell list");
            let _ = writeln!(
                s,
                "{ci},{i},{j},{},{},{}",
                format_value(cell.e_bar),
                format_value(cell.t_bar),
                format_value(cell.diff)
            );
        }
    }
    s
}

pub fn point_csv(doc: &PointDoc) -> String {
    format!(
        "e_over_omega,omega_t,c_over_g,err\n{},{},{},{}\n",
        format_value(doc.e_over_omega),
        format_value(doc.omega_t),
        format_value(doc.c_over_g),
        format_value(doc.err_estimate)
    )
}

pub fn to_json_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Computation(format!("writing {}: {e}", path.display())))
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("reading {}: {e}", path.display())))
}

pub fn read_grid_json(path: &Path) -> Result<SweepGrid, CliError> {
    let text = read_to_string(path)?;
    let doc: GridDoc = serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!(
            "{}: not a sweep document (expected `sweep --format json` output): {e}",
            path.display()
        ))
    })?;
    doc.into_grid()
}

pub fn read_diff_json(path: &Path) -> Result<DiffGrid, CliError> {
    let text = read_to_string(path)?;
    let doc: DiffDoc = serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!(
            "{}: not a difference document (expected `diff --format json` output): {e}",
            path.display()
        ))
    })?;
    doc.into_diff()
}

/// Parse any of the emitted CSV shapes into a header and numeric rows.
/// Non-numeric tag columns only ever appear in headers, so every data cell
/// must parse as f64. The CLI consumes JSON inputs only; this reader backs
/// the round-trip guarantee on the CSV writers.
#[cfg_attr(not(test), allow(dead_code))]
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>), CliError> {
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .ok_or_else(|| CliError::Validation("empty csv".to_string()))?
        .split(',')
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|field| field.parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| CliError::Validation(format!("csv line {}: {e}", k + 2)))?;
        if row.len() != header.len() {
            return Err(CliError::Validation(format!(
                "csv line {}: {} fields under a {}-column header",
                k + 2,
                row.len(),
                header.len()
            )));
        }
        rows.push(row);
    }
    Ok((header, rows))
}
