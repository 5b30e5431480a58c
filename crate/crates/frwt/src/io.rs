//! File formats: signal CSV (`t,re,im`), spectrum CSV (`xi,re,im`),
//! scalogram CSV (`b,a,re,im`, scale-major) with its JSON sidecar.
//!
//! All numeric output uses 17 significant digits so files round-trip exactly
//! and byte-identical reruns are auditable.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::cfrwt::{ScaleTranslationGrid, Scalogram};
use crate::error::{FrwtError, Result};
use crate::grid::{SampledSignal, ThetaOrder, UniformGrid};
use crate::real::Real;

/// Relative step tolerance for accepting CSV rows as a uniform grid.
const GRID_REL_TOL: f64 = 1e-9;

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_field(s: &str, line: usize, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| FrwtError::MalformedCsv(format!("line {line}: bad {what} `{s}`")))
}

fn parse_rows(text: &str, header: &str, cols: usize) -> Result<Vec<Vec<f64>>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim() == header => {}
        Some((_, first)) => {
            return Err(FrwtError::MalformedCsv(format!(
                "expected header `{header}`, found `{first}`"
            )))
        }
        None => return Err(FrwtError::MalformedCsv("empty file".into())),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != cols {
            return Err(FrwtError::MalformedCsv(format!(
                "line {}: expected {cols} fields, found {}",
                idx + 1,
                fields.len()
            )));
        }
        let mut row = Vec::with_capacity(cols);
        for (c, field) in fields.iter().enumerate() {
            row.push(parse_field(field, idx + 1, &format!("column {c}"))?);
        }
        rows.push(row);
    }
    if rows.len() < 2 {
        return Err(FrwtError::MalformedCsv(
            "need at least two data rows".into(),
        ));
    }
    Ok(rows)
}

fn grid_from_axis<T: Real>(axis: &[f64]) -> Result<UniformGrid<T>> {
    let n = axis.len();
    let step = (axis[n - 1] - axis[0]) / (n - 1) as f64;
    if !(step > 0.0) {
        return Err(FrwtError::MalformedCsv(
            "axis values must be strictly increasing".into(),
        ));
    }
    for (k, &t) in axis.iter().enumerate() {
        let expect = axis[0] + k as f64 * step;
        if (t - expect).abs() > GRID_REL_TOL * step.abs().max(expect.abs()) {
            return Err(FrwtError::MalformedCsv(format!(
                "row {k}: axis value {t} deviates from a uniform grid (expected {expect})"
            )));
        }
    }
    UniformGrid::new(T::lit(axis[0]), T::lit(step), n)
}

fn signal_body<T: Real>(axis_name: &str, grid: &UniformGrid<T>, values: &[Complex<T>]) -> String {
    let mut out = String::with_capacity(values.len() * 64);
    out.push_str(axis_name);
    out.push_str(",re,im\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{}",
            fmt17(grid.node(k).as_f64()),
            fmt17(v.re.as_f64()),
            fmt17(v.im.as_f64())
        );
    }
    out
}

pub fn write_signal_csv<T: Real>(path: &Path, signal: &SampledSignal<T>) -> Result<()> {
    fs::write(path, signal_body("t", signal.grid(), signal.values()))?;
    Ok(())
}

pub fn read_signal_csv<T: Real>(path: &Path) -> Result<SampledSignal<T>> {
    let text = fs::read_to_string(path)?;
    let rows = parse_rows(&text, "t,re,im", 3)?;
    let axis: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    let grid = grid_from_axis::<T>(&axis)?;
    let values = rows
        .iter()
        .map(|r| Complex::new(T::lit(r[1]), T::lit(r[2])))
        .collect();
    SampledSignal::new(grid, values)
}

pub fn write_spectrum_csv<T: Real>(
    path: &Path,
    grid: &UniformGrid<T>,
    values: &[Complex<T>],
) -> Result<()> {
    fs::write(path, signal_body("xi", grid, values))?;
    Ok(())
}

/// Grid description used in the sidecar: `count` nodes spanning `[min, max]`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn of<T: Real>(grid: &UniformGrid<T>) -> Self {
        Self {
            min: grid.t_min().as_f64(),
            max: grid.t_max().as_f64(),
            count: grid.count(),
        }
    }

    pub fn to_grid<T: Real>(&self) -> Result<UniformGrid<T>> {
        UniformGrid::from_span(T::lit(self.min), T::lit(self.max), self.count)
    }
}

/// Scale-ladder description: log-spaced `[min, max]` per sign branch.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ScaleSpec {
    pub min: f64,
    pub max: f64,
    pub per_sign: usize,
    pub signed: bool,
}

impl ScaleSpec {
    pub fn to_grid<T: Real>(
        &self,
        theta: ThetaOrder<T>,
        b_grid: UniformGrid<T>,
    ) -> Result<ScaleTranslationGrid<T>> {
        ScaleTranslationGrid::log_symmetric(
            theta,
            b_grid,
            T::lit(self.min),
            T::lit(self.max),
            self.per_sign,
            self.signed,
        )
    }
}

/// JSON sidecar accompanying a scalogram CSV; carries everything needed to
/// rebuild the grid and to audit the run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalogramSidecar {
    pub theta: f64,
    pub wavelet_id: String,
    pub normalized: bool,
    pub forward_path: String,
    pub translations: GridSpec,
    pub scales: ScaleSpec,
    /// Grid of the transformed signal, used as the default synthesis grid.
    #[serde(default)]
    pub signal_grid: Option<GridSpec>,
    /// Path of the custom wavelet CSV when one was supplied.
    #[serde(default)]
    pub wavelet_file: Option<String>,
    #[serde(default)]
    pub config_echo: serde_json::Value,
}

impl ScalogramSidecar {
    pub fn grid<T: Real>(&self) -> Result<ScaleTranslationGrid<T>> {
        let theta = ThetaOrder::new(T::lit(self.theta))?;
        self.scales.to_grid(theta, self.translations.to_grid()?)
    }
}

pub fn write_scalogram_csv<T: Real>(path: &Path, scalogram: &Scalogram<T>) -> Result<()> {
    let grid = scalogram.grid();
    let b_grid = grid.b_grid();
    let mut out = String::with_capacity(scalogram.values().len() * 80);
    out.push_str("b,a,re,im\n");
    for (i, &a) in grid.scales().iter().enumerate() {
        let row = scalogram.row(i);
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                fmt17(b_grid.node(j).as_f64()),
                fmt17(a.as_f64()),
                fmt17(v.re.as_f64()),
                fmt17(v.im.as_f64())
            );
        }
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn write_sidecar(path: &Path, sidecar: &ScalogramSidecar) -> Result<()> {
    let text = serde_json::to_string_pretty(sidecar)
        .map_err(|e| FrwtError::SidecarMismatch(e.to_string()))?;
    fs::write(path, text)?;
    Ok(())
}

pub fn read_sidecar(path: &Path) -> Result<ScalogramSidecar> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| FrwtError::SidecarMismatch(e.to_string()))
}

/// Reads a scalogram CSV against its sidecar, verifying that the `(b, a)`
/// columns reproduce the sidecar's grid within `1e-9` relative tolerance.
pub fn read_scalogram_csv<T: Real>(
    path: &Path,
    sidecar: &ScalogramSidecar,
) -> Result<Scalogram<T>> {
    let grid = sidecar.grid::<T>()?;
    let text = fs::read_to_string(path)?;
    let rows = parse_rows(&text, "b,a,re,im", 4)?;
    if rows.len() != grid.len() {
        return Err(FrwtError::SidecarMismatch(format!(
            "scalogram has {} rows, sidecar grid has {} points",
            rows.len(),
            grid.len()
        )));
    }
    let nb = grid.b_grid().count();
    let mut values = Vec::with_capacity(rows.len());
    for (idx, row) in rows.iter().enumerate() {
        let i = idx / nb;
        let j = idx % nb;
        let b_expect = grid.b_grid().node(j).as_f64();
        let a_expect = grid.scales()[i].as_f64();
        let tol = |x: f64| GRID_REL_TOL * x.abs().max(1.0);
        if (row[0] - b_expect).abs() > tol(b_expect) || (row[1] - a_expect).abs() > tol(a_expect) {
            return Err(FrwtError::SidecarMismatch(format!(
                "row {idx}: (b, a) = ({}, {}) does not match sidecar grid point ({b_expect}, {a_expect})",
                row[0], row[1]
            )));
        }
        values.push(Complex::new(T::lit(row[2]), T::lit(row[3])));
    }
    Scalogram::new(grid, values, sidecar.wavelet_id.clone(), sidecar.normalized)
}
