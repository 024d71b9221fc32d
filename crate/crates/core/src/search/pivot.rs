//! Two-angle family of configurations.
//!
//! The triangle has a vertex at `F = (1, 0)` and is turned about it by `psi`,
//! the direction of the edge leaving `F` toward the triangle's top vertex. The
//! square shares that top vertex and is turned about it by `phi`, the
//! direction of its edge leaving the shared vertex toward the lower left.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{better, SearchError, SearchResult};
use crate::configuration::{mu, reduce_angle, square_vertices, triangle_vertices, SQUARE_PERIOD, TRIANGLE_PERIOD};
use crate::geometry::{Point, Vector, F};
use crate::Config;

/// `psi` keeps `F` the right-most triangle vertex.
pub const PSI_RANGE: (f64, f64) = (FRAC_PI_2, 5.0 * PI / 6.0);
/// `phi` (open interval) keeps the shared vertex the top-most square vertex.
pub const PHI_RANGE: (f64, f64) = (PI, 3.0 * FRAC_PI_2);

/// Zoom window, in steps of the previous level on either side of the incumbent.
const ZOOM_HALF_WIDTH: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PivotParams {
    pub psi: f64,
    pub phi: f64,
}

impl PivotParams {
    pub fn new(psi: f64, phi: f64) -> Result<Self, SearchError> {
        let p = PivotParams { psi, phi };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let psi_ok = (PSI_RANGE.0..=PSI_RANGE.1).contains(&self.psi);
        let phi_ok = self.phi > PHI_RANGE.0 && self.phi < PHI_RANGE.1;
        if psi_ok && phi_ok {
            Ok(())
        } else {
            Err(SearchError::InvalidArgument(format!(
                "pivot angles out of range: psi = {} (need [pi/2, 5pi/6]), phi = {} (need (pi, 3pi/2))",
                self.psi, self.phi
            )))
        }
    }

    /// Angles read off an arbitrary configuration: `psi` from `F` to the
    /// triangle's top vertex, `phi` from the square's top vertex to its
    /// lower-left neighbour. Exact for configurations of the family.
    pub fn fit(c: &Config) -> PivotParams {
        let tri = triangle_vertices(c.x2, c.y2, c.beta);
        let sq = square_vertices(c.x1, c.y1, c.alpha);
        let t_top = top_most(&tri);
        let k = (0..4).max_by(|&i, &j| sq[i].y.total_cmp(&sq[j].y)).expect("4 vertices");
        let (prev, next) = (sq[(k + 3) % 4], sq[(k + 1) % 4]);
        let left = if prev.x < next.x { prev } else { next };
        PivotParams {
            psi: (t_top - F).angle(),
            phi: (left - sq[k]).angle().rem_euclid(2.0 * PI),
        }
    }
}

/// Highest vertex; ties go to the larger `x`.
fn top_most(v: &[Point]) -> Point {
    *v.iter()
        .max_by(|a, b| a.y.total_cmp(&b.y).then(a.x.total_cmp(&b.x)))
        .expect("non-empty")
}

fn assemble(p: &PivotParams) -> Config {
    let tri = [
        F,
        F + Vector::polar(0.5, p.psi),
        F + Vector::polar(0.5, p.psi + FRAC_PI_3),
    ];
    let centroid = Point::new(
        (tri[0].x + tri[1].x + tri[2].x) / 3.0,
        (tri[0].y + tri[1].y + tri[2].y) / 3.0,
    );
    let beta = reduce_angle((tri[0] - centroid).angle(), TRIANGLE_PERIOD);
    let top = top_most(&tri);
    let e1 = Vector::polar(1.0 / 3.0, p.phi);
    let e2 = Vector::polar(1.0 / 3.0, p.phi + FRAC_PI_2);
    let center = top + 0.5 * (e1 + e2);
    let alpha = reduce_angle((top - center).angle(), SQUARE_PERIOD);
    Config {
        x1: center.x,
        y1: center.y,
        alpha,
        x2: centroid.x,
        y2: centroid.y,
        beta,
    }
}

/// The configuration with the triangle hinged at `(1, 0)` and the square hung
/// from the triangle's top vertex.
pub fn pivot_config(p: PivotParams) -> Result<Config, SearchError> {
    p.validate()?;
    Ok(assemble(&p))
}

#[derive(Clone, Copy)]
struct Incumbent {
    area: f64,
    config: Config,
    params: PivotParams,
}

fn pick(a: Option<Incumbent>, b: Option<Incumbent>) -> Option<Incumbent> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if better(y.area, &y.config, x.area, &x.config) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Scans a `psi × phi` window on a uniform grid anchored at `origin`.
fn scan(origin: (f64, f64), psi_n: (i64, i64), phi_n: (i64, i64), step: f64) -> (Option<Incumbent>, u64) {
    (psi_n.0..=psi_n.1)
        .into_par_iter()
        .map(|i| {
            let psi = origin.0 + i as f64 * step;
            let mut best = None;
            let mut count = 0u64;
            if !(PSI_RANGE.0..=PSI_RANGE.1).contains(&psi) {
                return (best, count);
            }
            for j in phi_n.0..=phi_n.1 {
                let phi = origin.1 + j as f64 * step;
                if !(phi > PHI_RANGE.0 && phi < PHI_RANGE.1) {
                    continue;
                }
                let params = PivotParams { psi, phi };
                let config = assemble(&params);
                let area = mu(&config);
                count += 1;
                best = pick(best, Some(Incumbent { area, config, params }));
            }
            (best, count)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((None, 0), |(b, n), (b2, n2)| (pick(b, b2), n + n2))
}

/// Full scan of the pivot family at `coarse_step`, then repeated zooms: each
/// level searches ±10 previous steps around the incumbent with a step ten
/// times finer, until the step reaches `final_step`.
///
/// `stage_index` of the result is the number of zoom levels run.
pub fn conjecture_search(coarse_step: f64, final_step: f64) -> Result<SearchResult, SearchError> {
    if !(final_step > 0.0 && final_step <= coarse_step && coarse_step.is_finite()) {
        return Err(SearchError::InvalidArgument(format!(
            "need 0 < final_step <= coarse_step, got coarse = {coarse_step}, final = {final_step}"
        )));
    }
    let n_psi = ((PSI_RANGE.1 - PSI_RANGE.0) / coarse_step + 1e-9).floor() as i64;
    let n_phi = ((PHI_RANGE.1 - PHI_RANGE.0) / coarse_step).ceil() as i64;
    let (mut best, mut evaluations) = scan((PSI_RANGE.0, PHI_RANGE.0), (0, n_psi), (1, n_phi), coarse_step);

    let mut step = coarse_step;
    let mut levels = 0;
    while step > final_step * (1.0 + 1e-9) {
        let inc = best.ok_or_else(|| SearchError::InvalidArgument("empty pivot scan".into()))?;
        let fine = (step / 10.0).max(final_step);
        let half = (ZOOM_HALF_WIDTH * step / fine).round() as i64;
        let (b, n) = scan((inc.params.psi, inc.params.phi), (-half, half), (-half, half), fine);
        best = pick(best, b);
        evaluations += n;
        step = fine;
        levels += 1;
    }
    let inc = best.ok_or_else(|| SearchError::InvalidArgument("empty pivot scan".into()))?;
    Ok(SearchResult {
        best: inc.config,
        area: inc.area,
        evaluations,
        pruned: 0,
        stage_index: levels,
    })
}
