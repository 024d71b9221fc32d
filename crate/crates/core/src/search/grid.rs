//! Pruned 6-parameter grid scan.
//!
//! Squares and triangles are enumerated separately (K2 splits into one test
//! per shape), then paired. Work is chunked by the triangle's `(x2, y2)` node,
//! so every chunk feeds exactly one surface cell. Chunks never share state:
//! their pruning bound is their own incumbent, optionally seeded by a single
//! sequential pre-pass, which keeps counts and results identical for any
//! number of worker threads.
//!
//! Two lower bounds on a pair's hull area let whole pairs be skipped, both
//! from monotonicity of hull area under inclusion:
//! * `max(a, b)` where `a`, `b` are hull areas of the segment with each shape;
//! * `(top - bottom) / 2`, the two triangles spanned by the segment and the
//!   highest and lowest points (heights clamped at the x-axis).

use rayon::prelude::*;

use super::{axis_nodes, better, SearchError, SearchResult, Stage, SurfaceGrid};
use crate::configuration::{
    points_of, segment_square_area, segment_triangle_area, shape_in_k2, square_vertices, triangle_vertices,
};
use crate::geometry::{hull_area_of, Point};
use crate::Config;

/// Bounds are compared with this margin so rounding in the bound can never hide a tie.
const PRUNE_EPS: f64 = 1e-12;
/// Refuse stages whose pair count is hopeless even with pruning.
const MAX_PAIRS: f64 = 1e13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    On,
    Off,
}

struct SquareNode {
    x1: f64,
    verts: [Point; 4],
    area: f64,
}

/// Squares sharing `(y1, alpha)`, hence the same vertical extent.
struct SquareGroup {
    y1: f64,
    alpha: f64,
    top: f64,
    bottom: f64,
    min_area: f64,
    nodes: Vec<SquareNode>,
}

struct TriangleNode {
    beta: f64,
    verts: [Point; 3],
    area: f64,
    top: f64,
    bottom: f64,
}

struct Chunk {
    x2: f64,
    y2: f64,
    triangles: Vec<TriangleNode>,
}

#[derive(Clone, Copy)]
struct Best {
    area: f64,
    config: Config,
}

#[derive(Default)]
struct ChunkOutcome {
    best: Option<Best>,
    evaluations: u64,
    pruned: u64,
}

fn vertical_extent(verts: &[Point]) -> (f64, f64) {
    verts
        .iter()
        .fold((0.0f64, 0.0f64), |(t, b), p| (t.max(p.y), b.min(p.y)))
}

fn square_groups(stage: &Stage) -> Vec<SquareGroup> {
    let b = &stage.bbox;
    let xs = axis_nodes(b.x1.lo, b.x1.hi, stage.d1);
    let mut groups = Vec::new();
    for y1 in axis_nodes(b.y1.lo, b.y1.hi, stage.d1) {
        for alpha in axis_nodes(b.alpha.lo, b.alpha.hi, stage.d2) {
            let nodes: Vec<SquareNode> = xs
                .iter()
                .filter_map(|&x1| {
                    let verts = square_vertices(x1, y1, alpha);
                    shape_in_k2(&verts).then(|| SquareNode {
                        x1,
                        verts,
                        area: segment_square_area(&verts),
                    })
                })
                .collect();
            if nodes.is_empty() {
                continue;
            }
            // x1 only shifts the square sideways
            let (top, bottom) = vertical_extent(&nodes[0].verts);
            let min_area = nodes.iter().map(|n| n.area).fold(f64::INFINITY, f64::min);
            groups.push(SquareGroup {
                y1,
                alpha,
                top,
                bottom,
                min_area,
                nodes,
            });
        }
    }
    // cheap groups first so incumbents tighten early
    groups.sort_by(|a, b| {
        a.min_area
            .total_cmp(&b.min_area)
            .then(a.y1.total_cmp(&b.y1))
            .then(a.alpha.total_cmp(&b.alpha))
    });
    groups
}

fn chunks(stage: &Stage) -> Vec<Chunk> {
    let b = &stage.bbox;
    let betas = axis_nodes(b.beta.lo, b.beta.hi, stage.d2);
    let mut out = Vec::new();
    for x2 in axis_nodes(b.x2.lo, b.x2.hi, stage.d1) {
        for y2 in axis_nodes(b.y2.lo, b.y2.hi, stage.d1) {
            let triangles: Vec<TriangleNode> = betas
                .iter()
                .filter_map(|&beta| {
                    let verts = triangle_vertices(x2, y2, beta);
                    shape_in_k2(&verts).then(|| {
                        let (top, bottom) = vertical_extent(&verts);
                        TriangleNode {
                            beta,
                            verts,
                            area: segment_triangle_area(&verts),
                            top,
                            bottom,
                        }
                    })
                })
                .collect();
            if !triangles.is_empty() {
                out.push(Chunk { x2, y2, triangles });
            }
        }
    }
    out
}

impl ChunkOutcome {
    #[inline]
    fn offer(&mut self, area: f64, config: Config) -> bool {
        let take = match &self.best {
            None => true,
            Some(b) => better(area, &config, b.area, &b.config),
        };
        if take {
            self.best = Some(Best { area, config });
        }
        take
    }

    fn bound(&self, seed: f64) -> f64 {
        self.best.map_or(seed, |b| b.area.min(seed))
    }
}

fn run_chunk(chunk: &Chunk, groups: &[SquareGroup], pruning: Pruning, seed: f64) -> ChunkOutcome {
    let mut out = ChunkOutcome::default();
    let mut warm: Option<(usize, usize)> = None;
    for tri in &chunk.triangles {
        let config_of = |g: &SquareGroup, s: &SquareNode| Config {
            x1: s.x1,
            y1: g.y1,
            alpha: g.alpha,
            x2: chunk.x2,
            y2: chunk.y2,
            beta: tri.beta,
        };
        let eval = |out: &mut ChunkOutcome, gi: usize, si: usize| -> bool {
            let (g, s) = (&groups[gi], &groups[gi].nodes[si]);
            let area = hull_area_of(points_of(&s.verts, &tri.verts));
            out.evaluations += 1;
            out.offer(area, config_of(g, s))
        };

        if pruning == Pruning::Off {
            for (gi, g) in groups.iter().enumerate() {
                for si in 0..g.nodes.len() {
                    eval(&mut out, gi, si);
                }
            }
            continue;
        }

        // Pairing with the incumbent square gives a tight bound straight away.
        let pre = warm;
        if let Some((gi, si)) = pre {
            eval(&mut out, gi, si);
        }
        let mut bound = out.bound(seed);
        let total: u64 = groups.iter().map(|g| g.nodes.len() as u64).sum();
        if tri.area > bound + PRUNE_EPS {
            out.pruned += total - u64::from(pre.is_some());
            continue;
        }
        for (gi, g) in groups.iter().enumerate() {
            let spread = 0.5 * (g.top.max(tri.top) - g.bottom.min(tri.bottom));
            if g.min_area.max(spread) > bound + PRUNE_EPS {
                let skipped = g.nodes.len() as u64;
                out.pruned += skipped - u64::from(pre.is_some_and(|w| w.0 == gi));
                continue;
            }
            for (si, s) in g.nodes.iter().enumerate() {
                if pre == Some((gi, si)) {
                    continue;
                }
                if s.area > bound + PRUNE_EPS {
                    out.pruned += 1;
                    continue;
                }
                if eval(&mut out, gi, si) {
                    bound = out.bound(seed);
                    warm = Some((gi, si));
                }
            }
        }
    }
    out
}

/// Scans every grid node of `stage` that passes K2 and returns the minimum
/// hull area, ties going to the lexicographically smallest 6-tuple.
///
/// With a surface accumulator, every cell also receives the minimum over the
/// nodes whose `(x2, y2)` falls inside it.
pub fn grid_search(stage: &Stage, surface: Option<&mut SurfaceGrid>) -> Result<SearchResult, SearchError> {
    grid_search_with(stage, surface, Pruning::On)
}

pub fn grid_search_with(
    stage: &Stage,
    surface: Option<&mut SurfaceGrid>,
    pruning: Pruning,
) -> Result<SearchResult, SearchError> {
    stage.validate()?;
    let groups = square_groups(stage);
    let chunks = chunks(stage);
    let squares: usize = groups.iter().map(|g| g.nodes.len()).sum();
    let triangles: usize = chunks.iter().map(|c| c.triangles.len()).sum();
    if squares == 0 || triangles == 0 {
        return Err(SearchError::NoAdmissibleNode);
    }
    if squares as f64 * triangles as f64 > MAX_PAIRS {
        return Err(SearchError::InvalidPlan(format!(
            "stage has {squares} squares x {triangles} triangles; refine the box or coarsen the steps"
        )));
    }

    // Without a surface every chunk may prune against one global incumbent,
    // taken from the chunk nearest the box center.
    let (seed_outcome, seed_index) = if surface.is_none() && pruning == Pruning::On {
        let c = stage.bbox.center();
        let idx = (0..chunks.len())
            .min_by(|&i, &j| {
                let d = |k: usize| (chunks[k].x2 - c.x2).powi(2) + (chunks[k].y2 - c.y2).powi(2);
                d(i).total_cmp(&d(j))
            })
            .expect("at least one chunk");
        (Some(run_chunk(&chunks[idx], &groups, pruning, f64::INFINITY)), Some(idx))
    } else {
        (None, None)
    };
    let seed = seed_outcome
        .as_ref()
        .and_then(|o| o.best)
        .map_or(f64::INFINITY, |b| b.area);

    let outcomes: Vec<ChunkOutcome> = chunks
        .par_iter()
        .enumerate()
        .map(|(i, chunk)| {
            if Some(i) == seed_index {
                ChunkOutcome::default()
            } else {
                run_chunk(chunk, &groups, pruning, seed)
            }
        })
        .collect();

    let mut total = seed_outcome.unwrap_or_default();
    let mut surface = surface;
    for (i, o) in outcomes.into_iter().enumerate() {
        if Some(i) == seed_index {
            continue;
        }
        if let (Some(s), Some(b)) = (surface.as_deref_mut(), o.best) {
            s.offer(chunks[i].x2, chunks[i].y2, b.area, b.config);
        }
        total.evaluations += o.evaluations;
        total.pruned += o.pruned;
        if let Some(b) = o.best {
            total.offer(b.area, b.config);
        }
    }
    let best = total.best.ok_or(SearchError::NoAdmissibleNode)?;
    Ok(SearchResult {
        best: best.config,
        area: best.area,
        evaluations: total.evaluations,
        pruned: total.pruned,
        stage_index: 0,
    })
}
