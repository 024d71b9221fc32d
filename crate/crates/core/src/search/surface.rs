use serde::{Deserialize, Serialize};

use super::{better, grid_search, SearchError, Stage};
use crate::configuration::{DomainBox, Interval};
use crate::Config;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCell {
    pub min_area: f64,
    pub argmin: Config,
}

/// Per-cell minima of the hull area over the triangle center `(x2, y2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub x2: Interval,
    pub y2: Interval,
    pub nx: usize,
    pub ny: usize,
    cells: Vec<Option<SurfaceCell>>,
}

impl SurfaceGrid {
    pub fn new(x2: Interval, y2: Interval, nx: usize, ny: usize) -> Result<Self, SearchError> {
        if nx == 0 || ny == 0 {
            return Err(SearchError::InvalidArgument(format!("cell counts must be positive, got {nx} x {ny}")));
        }
        let ok = |iv: &Interval| iv.lo.is_finite() && iv.hi.is_finite() && iv.lo <= iv.hi;
        if !ok(&x2) || !ok(&y2) {
            return Err(SearchError::InvalidArgument(format!("bad surface box {x2:?} x {y2:?}")));
        }
        Ok(SurfaceGrid {
            x2,
            y2,
            nx,
            ny,
            cells: vec![None; nx * ny],
        })
    }

    fn axis_index(iv: &Interval, n: usize, v: f64) -> Option<usize> {
        if !iv.contains(v) {
            return None;
        }
        if iv.width() == 0.0 {
            return Some(0);
        }
        let k = ((v - iv.lo) / iv.width() * n as f64).floor() as usize;
        Some(k.min(n - 1))
    }

    /// `(i, j)` of the cell holding `(x2, y2)`, if inside the box.
    pub fn cell_of(&self, x2: f64, y2: f64) -> Option<(usize, usize)> {
        Some((
            Self::axis_index(&self.x2, self.nx, x2)?,
            Self::axis_index(&self.y2, self.ny, y2)?,
        ))
    }

    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.x2.lo + (i as f64 + 0.5) * self.x2.width() / self.nx as f64,
            self.y2.lo + (j as f64 + 0.5) * self.y2.width() / self.ny as f64,
        )
    }

    pub fn cell_size(&self) -> (f64, f64) {
        (self.x2.width() / self.nx as f64, self.y2.width() / self.ny as f64)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&SurfaceCell> {
        self.cells.get(j * self.nx + i).and_then(|c| c.as_ref())
    }

    pub fn set(&mut self, i: usize, j: usize, cell: SurfaceCell) {
        self.cells[j * self.nx + i] = Some(cell);
    }

    /// Records a node value; nodes outside the box are ignored.
    pub fn offer(&mut self, x2: f64, y2: f64, area: f64, config: Config) {
        let Some((i, j)) = self.cell_of(x2, y2) else {
            return;
        };
        let slot = &mut self.cells[j * self.nx + i];
        let take = match slot {
            None => true,
            Some(c) => better(area, &config, c.min_area, &c.argmin),
        };
        if take {
            *slot = Some(SurfaceCell { min_area: area, argmin: config });
        }
    }

    /// Cell-wise minimum with another grid of identical layout.
    pub fn merge(&mut self, other: &SurfaceGrid) -> Result<(), SearchError> {
        if (self.x2, self.y2, self.nx, self.ny) != (other.x2, other.y2, other.nx, other.ny) {
            return Err(SearchError::InvalidArgument("surface layouts differ".into()));
        }
        for (k, c) in other.cells.iter().enumerate() {
            if let Some(c) = c {
                let (i, j) = (k % self.nx, k / self.nx);
                let slot = &mut self.cells[j * self.nx + i];
                if slot.is_none_or(|s| better(c.min_area, &c.argmin, s.min_area, &s.argmin)) {
                    *slot = Some(*c);
                }
            }
        }
        Ok(())
    }

    /// Non-empty cells in row-major order (`j` outer, `i` inner).
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &SurfaceCell)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.as_ref().map(|c| (k % self.nx, k / self.nx, c)))
    }

    pub fn global_min(&self) -> Option<(usize, usize, &SurfaceCell)> {
        self.iter()
            .min_by(|a, b| a.2.min_area.total_cmp(&b.2.min_area).then(a.2.argmin.lex_cmp(&b.2.argmin)))
    }
}

/// Grid search over `bbox` tracking the best configuration per `(x2, y2)` cell.
pub fn surface_min(bbox: DomainBox, cells: (usize, usize), d1: f64, d2: f64) -> Result<SurfaceGrid, SearchError> {
    let mut surface = SurfaceGrid::new(bbox.x2, bbox.y2, cells.0, cells.1)?;
    grid_search(&Stage::new(bbox, d1, d2), Some(&mut surface))?;
    Ok(surface)
}
