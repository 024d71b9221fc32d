//! Minimal-area configuration search.
//!
//! * [`grid_search`] scans a 6-parameter box with pruning and optional
//!   per-`(x2, y2)` surface accumulation.
//! * [`run_plan`] chains stages, each optionally zooming on the previous best.
//! * [`conjecture_search`] scans the two-angle family where the triangle hinges
//!   on `(1, 0)` and the square hangs from the triangle's top vertex.

mod grid;
mod pivot;
mod plan;
mod surface;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::configuration::{search_domain, ConfigError, DomainBox, TRIANGLE_PERIOD};
use crate::Config;

pub use grid::{grid_search, grid_search_with, Pruning};
pub use pivot::{conjecture_search, pivot_config, PivotParams, PHI_RANGE, PSI_RANGE};
pub use plan::{run_plan, run_plan_with_surface, SearchPlan, StageSpec};
pub use surface::{surface_min, SurfaceCell, SurfaceGrid};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no grid node in the stage satisfies the K2 normalization")]
    NoAdmissibleNode,
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// One grid pass: a box and the coordinate (`d1`) and angle (`d2`) steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    #[serde(rename = "box")]
    pub bbox: DomainBox,
    pub d1: f64,
    pub d2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best: Config,
    /// `mu(best)`, bit for bit.
    pub area: f64,
    pub evaluations: u64,
    pub pruned: u64,
    pub stage_index: usize,
}

impl SearchResult {
    /// Strictly better: smaller area, or equal area and lexicographically smaller tuple.
    pub fn beats(&self, other: &SearchResult) -> bool {
        better(self.area, &self.best, other.area, &other.best)
    }
}

#[inline]
pub(crate) fn better(area: f64, c: &Config, best_area: f64, best: &Config) -> bool {
    area < best_area || (area == best_area && c.lex_cmp(best).is_lt())
}

/// Boxes a stage may live in: the search domain and its image under the half
/// turn about `(1/2, 0)`, which shifts the triangle angle by 60 degrees.
pub fn admissible_domains() -> [DomainBox; 2] {
    let d = search_domain();
    let mut turned = d;
    turned.beta = d.beta.shifted(-TRIANGLE_PERIOD / 2.0);
    [d, turned]
}

const DOMAIN_TOL: f64 = 1e-12;

impl Stage {
    pub fn new(bbox: DomainBox, d1: f64, d2: f64) -> Self {
        Stage { bbox, d1, d2 }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        self.bbox.validate()?;
        if !(self.d1 > 0.0 && self.d2 > 0.0 && self.d1.is_finite() && self.d2.is_finite()) {
            return Err(SearchError::InvalidPlan(format!(
                "grid steps must be positive, got d1 = {}, d2 = {}",
                self.d1, self.d2
            )));
        }
        if !admissible_domains().iter().any(|d| d.contains_box(&self.bbox, DOMAIN_TOL)) {
            return Err(SearchError::InvalidPlan(format!(
                "stage box {:?} is not inside the search domain",
                self.bbox
            )));
        }
        Ok(())
    }
}

/// Grid coordinates `lo + i * step` covering `[lo, hi]`; a single node when the
/// interval is narrower than one step.
pub(crate) fn axis_nodes(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor().max(0.0) as usize + 1;
    (0..n).map(|i| lo + i as f64 * step).collect()
}
