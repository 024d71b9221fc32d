//! Surface CSV files and SVG heatmaps.
//!
//! A surface CSV has the header
//! `x2,y2,min_area,x1,y1,alpha,x2_arg,y2_arg,beta`: the cell center, the cell
//! minimum, and the configuration attaining it. Empty cells are omitted.

mod heatmap;

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::search::SurfaceGrid;
use crate::Config;

pub use heatmap::render_heatmap_svg;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CSV row {row}: {msg}")]
    MalformedRow { row: u64, msg: String },
    #[error("CSV has no data rows")]
    Empty,
    #[error("CSV write failed: {0}")]
    Write(String),
}

impl IoError {
    fn file(path: &Path, source: std::io::Error) -> Self {
        IoError::File {
            path: path.display().to_string(),
            source,
        }
    }
}

/// One line of a surface CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceRow {
    pub x2: f64,
    pub y2: f64,
    pub min_area: f64,
    pub x1: f64,
    pub y1: f64,
    pub alpha: f64,
    pub x2_arg: f64,
    pub y2_arg: f64,
    pub beta: f64,
}

impl SurfaceRow {
    pub fn argmin(&self) -> Config {
        Config {
            x1: self.x1,
            y1: self.y1,
            alpha: self.alpha,
            x2: self.x2_arg,
            y2: self.y2_arg,
            beta: self.beta,
        }
    }

    fn values(&self) -> [f64; 9] {
        [
            self.x2,
            self.y2,
            self.min_area,
            self.x1,
            self.y1,
            self.alpha,
            self.x2_arg,
            self.y2_arg,
            self.beta,
        ]
    }
}

/// Rows for the non-empty cells, row-major.
pub fn surface_rows(surface: &SurfaceGrid) -> Vec<SurfaceRow> {
    surface
        .iter()
        .map(|(i, j, cell)| {
            let (x2, y2) = surface.cell_center(i, j);
            let c = cell.argmin;
            SurfaceRow {
                x2,
                y2,
                min_area: cell.min_area,
                x1: c.x1,
                y1: c.y1,
                alpha: c.alpha,
                x2_arg: c.x2,
                y2_arg: c.y2,
                beta: c.beta,
            }
        })
        .collect()
}

pub fn write_surface_csv<W: Write>(surface: &SurfaceGrid, out: W) -> Result<(), IoError> {
    write_rows_csv(&surface_rows(surface), out)
}

pub fn write_rows_csv<W: Write>(rows: &[SurfaceRow], out: W) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["x2", "y2", "min_area", "x1", "y1", "alpha", "x2_arg", "y2_arg", "beta"])
            .map_err(|e| IoError::Write(e.to_string()))?;
    }
    for r in rows {
        w.serialize(r).map_err(|e| IoError::Write(e.to_string()))?;
    }
    w.flush().map_err(|e| IoError::Write(e.to_string()))
}

/// Parses a surface CSV. Row numbers in errors are file line numbers, the header being line 1.
pub fn read_surface_csv<R: Read>(input: R) -> Result<Vec<SurfaceRow>, IoError> {
    let mut rdr = csv::Reader::from_reader(input);
    let headers = rdr
        .headers()
        .map_err(|e| IoError::MalformedRow { row: 1, msg: e.to_string() })?
        .clone();
    let mut rows = Vec::new();
    for (k, rec) in rdr.records().enumerate() {
        let line = k as u64 + 2;
        let rec = rec.map_err(|e| IoError::MalformedRow {
            row: e.position().map_or(line, |p| p.line()),
            msg: e.to_string(),
        })?;
        let row: SurfaceRow = rec
            .deserialize(Some(&headers))
            .map_err(|e| IoError::MalformedRow { row: line, msg: e.to_string() })?;
        if row.values().iter().any(|v| !v.is_finite()) {
            return Err(IoError::MalformedRow {
                row: line,
                msg: "non-finite value".into(),
            });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(IoError::Empty);
    }
    Ok(rows)
}

pub fn write_surface_csv_file(surface: &SurfaceGrid, path: &Path) -> Result<(), IoError> {
    let f = File::create(path).map_err(|e| IoError::file(path, e))?;
    write_surface_csv(surface, BufWriter::new(f))
}

pub fn read_surface_csv_file(path: &Path) -> Result<Vec<SurfaceRow>, IoError> {
    let f = File::open(path).map_err(|e| IoError::file(path, e))?;
    read_surface_csv(f)
}

/// Reads `csv_in` and writes its heatmap to `svg_out`. Returns the number of cells drawn.
pub fn heatmap_file(csv_in: &Path, svg_out: &Path) -> Result<usize, IoError> {
    let rows = read_surface_csv_file(csv_in)?;
    let svg = render_heatmap_svg(&rows)?;
    std::fs::write(svg_out, svg).map_err(|e| IoError::file(svg_out, e))?;
    Ok(rows.len())
}
