use serde::{Deserialize, Serialize};

use super::{admissible_domains, axis_nodes, grid_search, SearchError, SearchResult, Stage, SurfaceGrid};
use crate::configuration::{DomainBox, Interval};

/// One entry of a plan: an explicit box, or a window around the previous best.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StageSpec {
    Explicit(Stage),
    Auto { auto: bool, d1: f64, d2: f64 },
}

impl StageSpec {
    pub fn auto(d1: f64, d2: f64) -> Self {
        StageSpec::Auto { auto: true, d1, d2 }
    }

    pub fn steps(&self) -> (f64, f64) {
        match *self {
            StageSpec::Explicit(s) => (s.d1, s.d2),
            StageSpec::Auto { d1, d2, .. } => (d1, d2),
        }
    }
}

/// Ordered grid stages, e.g.
///
/// ```json
/// {"stages": [
///   {"box": {"x1": [0.6, 0.72], "y1": [0.14, 0.24], "alpha": [1.2, 1.35],
///            "x2": [0.7, 0.77], "y2": [0.1, 0.17], "beta": [1.55, 1.69]},
///    "d1": 0.01, "d2": 0.01},
///   {"auto": true, "d1": 0.002, "d2": 0.002}
/// ]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchPlan {
    pub stages: Vec<StageSpec>,
}

impl SearchPlan {
    pub fn from_json(text: &str) -> Result<Self, SearchError> {
        let plan: SearchPlan = serde_json::from_str(text).map_err(|e| SearchError::InvalidPlan(e.to_string()))?;
        plan.validate()?;
        Ok(plan)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plan serializes")
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.stages.is_empty() {
            return Err(SearchError::InvalidPlan("plan has no stages".into()));
        }
        for (k, s) in self.stages.iter().enumerate() {
            match s {
                StageSpec::Explicit(stage) => stage.validate()?,
                StageSpec::Auto { auto, d1, d2 } => {
                    if !auto {
                        return Err(SearchError::InvalidPlan(format!("stage {k}: \"auto\" must be true")));
                    }
                    if k == 0 {
                        return Err(SearchError::InvalidPlan("the first stage needs an explicit box".into()));
                    }
                    if !(*d1 > 0.0 && *d2 > 0.0 && d1.is_finite() && d2.is_finite()) {
                        return Err(SearchError::InvalidPlan(format!("stage {k}: grid steps must be positive")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Window of half-width `2 * prev_step` around `center`, widened to a whole
/// number of new steps so the old best stays on the new grid.
fn zoom_interval(center: f64, prev_step: f64, step: f64, clamp: &Interval) -> Interval {
    let m = (2.0 * prev_step / step - 1e-9).ceil().max(1.0);
    clamp.clamp_window(center, m * step)
}

fn resolve(spec: &StageSpec, prev: Option<(&Stage, &SearchResult)>) -> Result<Stage, SearchError> {
    match *spec {
        StageSpec::Explicit(s) => Ok(s),
        StageSpec::Auto { d1, d2, .. } => {
            let (prev_stage, prev_best) =
                prev.ok_or_else(|| SearchError::InvalidPlan("auto stage without a previous stage".into()))?;
            let best = prev_best.best;
            let domain = admissible_domains()
                .into_iter()
                .find(|d| d.contains(&best))
                .unwrap_or(admissible_domains()[0]);
            let coord = |c: f64, iv: Interval| zoom_interval(c, prev_stage.d1, d1, &iv);
            let angle = |c: f64, iv: Interval| zoom_interval(c, prev_stage.d2, d2, &iv);
            Ok(Stage::new(
                DomainBox {
                    x1: coord(best.x1, domain.x1),
                    y1: coord(best.y1, domain.y1),
                    alpha: angle(best.alpha, domain.alpha),
                    x2: coord(best.x2, domain.x2),
                    y2: coord(best.y2, domain.y2),
                    beta: angle(best.beta, domain.beta),
                },
                d1,
                d2,
            ))
        }
    }
}

/// Runs the stages in order and returns the best configuration seen.
///
/// `stage_index` names the stage that found it; `evaluations` and `pruned`
/// are totals over all stages. A later stage never loses the earlier
/// incumbent, so the area is non-increasing along the plan.
pub fn run_plan(plan: &SearchPlan) -> Result<SearchResult, SearchError> {
    run_plan_inner(plan, false).map(|(r, _)| r)
}

/// [`run_plan`], additionally returning the surface of the final stage with
/// one cell per `(x2, y2)` grid node.
pub fn run_plan_with_surface(plan: &SearchPlan) -> Result<(SearchResult, SurfaceGrid), SearchError> {
    let (r, s) = run_plan_inner(plan, true)?;
    Ok((r, s.expect("surface requested")))
}

fn run_plan_inner(plan: &SearchPlan, want_surface: bool) -> Result<(SearchResult, Option<SurfaceGrid>), SearchError> {
    plan.validate()?;
    let mut prev: Option<(Stage, SearchResult)> = None;
    let mut surface = None;
    let (mut evaluations, mut pruned) = (0u64, 0u64);
    let last = plan.stages.len() - 1;
    for (k, spec) in plan.stages.iter().enumerate() {
        let stage = resolve(spec, prev.as_ref().map(|(s, r)| (s, r)))?;
        let mut grid = if want_surface && k == last {
            let nx = axis_nodes(stage.bbox.x2.lo, stage.bbox.x2.hi, stage.d1).len();
            let ny = axis_nodes(stage.bbox.y2.lo, stage.bbox.y2.hi, stage.d1).len();
            Some(SurfaceGrid::new(stage.bbox.x2, stage.bbox.y2, nx, ny)?)
        } else {
            None
        };
        let mut result = grid_search(&stage, grid.as_mut())?;
        result.stage_index = k;
        evaluations += result.evaluations;
        pruned += result.pruned;
        let keep = match &prev {
            Some((_, p)) if !result.beats(p) => *p,
            _ => result,
        };
        prev = Some((stage, keep));
        surface = grid;
    }
    let (_, mut best) = prev.expect("plan has stages");
    best.evaluations = evaluations;
    best.pruned = pruned;
    Ok((best, surface))
}
