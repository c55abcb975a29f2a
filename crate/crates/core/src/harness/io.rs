//! File formats: vectors are JSON arrays of `[re, im]`, matrices and
//! transform tables are CSV or JSON, reports are JSON.

use std::fs;
use std::path::{Path, PathBuf};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::config::Config;
use crate::harness::verify::random_state;
use crate::heisenberg::{GwhElement, GwhGroup};
use crate::repr::{rep_matrix, Rep, Space, StateVector, MATRIX_CAP};
use crate::wavelet::{calderon_function, cwt, reconstruct, wavelet_constant, CalderonReport, CwtTable};

/// Number of random probe signals the admissibility report checks the energy identity on.
pub const ADMISSIBILITY_PROBES: usize = 5;

pub fn read_vector(path: impl AsRef<Path>, group: &GwhGroup, space: Space) -> Result<StateVector> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&fs::read_to_string(path)?)?;
    let dim = space.dim(group);
    if pairs.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: pairs.len() });
    }
    StateVector::new(group, space, pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
}

pub fn vector_json(v: &StateVector) -> Result<String> {
    let pairs: Vec<[f64; 2]> = v.values().iter().map(|c| [c.re, c.im]).collect();
    Ok(serde_json::to_string(&pairs)?)
}

pub fn write_vector(path: impl AsRef<Path>, v: &StateVector) -> Result<()> {
    fs::write(path, vector_json(v)?)?;
    Ok(())
}

/// Parses `h,k,a,z`.
pub fn parse_element(text: &str) -> Result<GwhElement> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Config { field: "element".into(), message: e.to_string() })?;
    match parts[..] {
        [h, k, a, z] => Ok(GwhElement::new(h, k, a, z)),
        _ => Err(Error::Config { field: "element".into(), message: format!("expected h,k,a,z, got `{text}`") }),
    }
}

fn cell(c: &Complex64) -> String {
    format!("{},{}", c.re, c.im)
}

/// Row-major CSV with one `re,im` cell per entry.
pub fn matrix_csv(m: &DMatrix<Complex64>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
    for i in 0..m.nrows() {
        w.write_record((0..m.ncols()).map(|j| cell(&m[(i, j)])))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub rep: Rep,
    pub element: GwhElement,
    pub space: Space,
    pub index_scheme: String,
    pub dim: usize,
    /// Row-major entries as `[re, im]`.
    pub rows: Vec<Vec<[f64; 2]>>,
}

impl MatrixExport {
    pub fn new(rep: Rep, element: GwhElement, space: Space, m: &DMatrix<Complex64>) -> Self {
        Self {
            rep,
            element,
            space,
            index_scheme: space.index_scheme().into(),
            dim: m.nrows(),
            rows: (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect(),
        }
    }
}

/// Where a command writes: a single `.csv`/`.json` file, or a directory.
fn outputs(out: &Path, stem: &str) -> Result<(Option<PathBuf>, Option<PathBuf>)> {
    match out.extension().and_then(|e| e.to_str()) {
        Some("csv") => Ok((Some(out.into()), None)),
        Some("json") => Ok((None, Some(out.into()))),
        _ => {
            fs::create_dir_all(out)?;
            Ok((Some(out.join(format!("{stem}.csv"))), Some(out.join(format!("{stem}.json")))))
        }
    }
}

/// Writes the matrix of `rep(g)`.
pub fn run_repr(cfg: &Config, element: GwhElement, rep: Rep, out: &Path) -> Result<Vec<PathBuf>> {
    let group = cfg.build()?;
    let op = rep_matrix(&group, rep, &element, MATRIX_CAP)?;
    let (csv_path, json_path) = outputs(out, "matrix")?;
    let mut written = vec![];
    if let Some(p) = csv_path {
        fs::write(&p, matrix_csv(op.matrix())?)?;
        written.push(p);
    }
    if let Some(p) = json_path {
        let export = MatrixExport::new(rep, element, op.space(), op.matrix());
        fs::write(&p, serde_json::to_string_pretty(&export)?)?;
        written.push(p);
    }
    Ok(written)
}

/// Columns `h,k,a,zidx,re,im`.
pub fn cwt_csv(table: &CwtTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["h", "k", "a", "zidx", "re", "im"])?;
    for ([h, k, a, z], v) in table.rows() {
        w.write_record([h.to_string(), k.to_string(), a.to_string(), z.to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CwtSummary {
    pub rep: Rep,
    pub energy: f64,
    pub c_psi: Option<f64>,
    pub signal_norm: f64,
    pub window_norm: f64,
    /// `||f - reconstruct(W_psi f)|| / ||f||`, absent for a zero signal.
    pub reconstruction_residual: Option<f64>,
    pub element_index: String,
}

/// Transforms `signal` against `window` and writes `cwt.csv`, `cwt.json` and
/// `summary.json` into `out`.
pub fn run_cwt(cfg: &Config, rep: Rep, window: &Path, signal: &Path, out: &Path) -> Result<CwtSummary> {
    let group = cfg.build()?;
    let psi = read_vector(window, &group, rep.space())?;
    let f = read_vector(signal, &group, rep.space())?;
    let c_psi = wavelet_constant(&group, rep, &psi)?;
    let table = cwt(&group, rep, &psi, &f)?;
    let reconstruction_residual = if f.norm() > 0.0 {
        Some(reconstruct(&group, rep, &psi, &table)?.distance(&f) / f.norm())
    } else {
        None
    };
    let summary = CwtSummary {
        rep,
        energy: table.energy(),
        c_psi: Some(c_psi),
        signal_norm: f.norm(),
        window_norm: psi.norm(),
        reconstruction_residual,
        element_index: "[h, k, a, zidx], lexicographic with zidx fastest".into(),
    };
    fs::create_dir_all(out)?;
    fs::write(out.join("cwt.csv"), cwt_csv(&table)?)?;
    fs::write(out.join("cwt.json"), serde_json::to_string(&table)?)?;
    fs::write(out.join("summary.json"), serde_json::to_string_pretty(&summary)?)?;
    Ok(summary)
}

/// Calderon report for a window on `L^2(K^ x C_m)`, written as JSON to `out`.
/// The energy identity is checked on random probes drawn from the config seed.
pub fn run_admissibility(cfg: &Config, window: &Path, out: &Path) -> Result<CalderonReport> {
    let group = cfg.build()?;
    let psi = read_vector(window, &group, Space::Quasi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let probes: Vec<StateVector> =
        (0..ADMISSIBILITY_PROBES).map(|_| random_state(&group, Space::Quasi, &mut rng)).collect();
    let report = calderon_function(&group, &psi, &probes, cfg.tolerance)?;
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(out, serde_json::to_string_pretty(&report)?)?;
    Ok(report)
}
