//! Closed-form lower bounds on the hull area and their certification.
//!
//! For a configuration in K1 ∩ K2 the hull area is at least
//! `p(α, β) = max(f(α, β), g(α), h(β))` with
//!
//! ```text
//! f(α, β) = (½ cos(α − β + 15°) + cos(α − 45°)) / 6
//! g(α)    = (√2 / 6) sin α
//! h(β)    = ¼ max(sin(β − 30°), sin(β + 30°))
//! ```
//!
//! [`certify_theorem`] bounds `min p` over the K1 angle window from below by
//! sampling cell centers and subtracting a Lipschitz slack. Each of `f`, `g`
//! and `h` moves by at most `0.25` per radian in either angle
//! (`|∂f/∂α| ≤ (½ + 1)/6`, `|∂f/∂β| ≤ 1/12`, `|g'| ≤ √2/6`, `|h'| ≤ ¼`), and a
//! pointwise max inherits the largest constant, so on a cell of widths
//! `(sα, sβ)` the value at the center exceeds the cell minimum by at most
//! `0.25 (sα + sβ) / 2`.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::configuration::{k1_alpha, k1_beta, Interval};

/// Per-coordinate Lipschitz constant of `p`, per radian.
pub const P_LIPSCHITZ: f64 = 0.25;

/// Perimeter bound for hulls of K2 configurations used by the grid-error estimate.
pub const PERIMETER_D: f64 = 3.46364;
/// Slope of the linearized grid error in the coordinate step.
pub const ERROR_SLOPE_D1: f64 = 2.44916;
/// Slope of the linearized grid error in the angle step.
pub const ERROR_SLOPE_D2: f64 = 0.49993;

/// The lower bound proven for every configuration.
pub const THEOREM_TARGET: f64 = 0.227498;

/// Cell budget for branch and bound.
pub const BNB_MAX_CELLS: u64 = 50_000_000;
/// Default smallest cell width for branch and bound, radians.
pub const BNB_DEFAULT_RESOLUTION: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("angles out of range: alpha = {alpha} rad (need [0, pi/2]), beta = {beta} rad (need [pi/3, 2pi/3])")]
    AngleOutOfRange { alpha: f64, beta: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundBreakdown {
    pub f: f64,
    pub g: f64,
    pub h: f64,
    pub p: f64,
}

const DEG15: f64 = PI / 12.0;
const DEG30: f64 = PI / 6.0;
const DEG45: f64 = PI / 4.0;

#[inline]
pub fn f_bound(alpha: f64, beta: f64) -> f64 {
    (0.5 * (alpha - beta + DEG15).cos() + (alpha - DEG45).cos()) / 6.0
}

#[inline]
pub fn g_bound(alpha: f64) -> f64 {
    SQRT_2 / 6.0 * alpha.sin()
}

#[inline]
pub fn h_bound(beta: f64) -> f64 {
    0.25 * (beta - DEG30).sin().max((beta + DEG30).sin())
}

#[inline]
pub fn p_bound(alpha: f64, beta: f64) -> f64 {
    f_bound(alpha, beta).max(g_bound(alpha)).max(h_bound(beta))
}

pub fn bound_breakdown(alpha: f64, beta: f64) -> Result<BoundBreakdown, BoundsError> {
    const TOL: f64 = 1e-12;
    let ok = (-TOL..=FRAC_PI_2 + TOL).contains(&alpha) && (PI / 3.0 - TOL..=2.0 * PI / 3.0 + TOL).contains(&beta);
    if !ok {
        return Err(BoundsError::AngleOutOfRange { alpha, beta });
    }
    let (f, g, h) = (f_bound(alpha, beta), g_bound(alpha), h_bound(beta));
    Ok(BoundBreakdown {
        f,
        g,
        h,
        p: f.max(g).max(h),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertifyMethod {
    FullGrid,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateStatus {
    Certified,
    Failed,
}

/// Record of a finite computation bounding `min p` over the K1 window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub target: f64,
    /// A proven lower bound on `p` over the whole window (up to float rounding).
    pub certified_min: f64,
    pub cells_examined: u64,
    pub max_depth: u32,
    pub method: CertifyMethod,
    pub status: CertificateStatus,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.status == CertificateStatus::Certified
    }
}

#[inline]
fn slack(wa: f64, wb: f64) -> f64 {
    P_LIPSCHITZ * (wa + wb) / 2.0
}

/// Certifies `p(α, β) ≥ target` on `[45°, 78°] × [83°, 97°]`.
///
/// `resolution` is the cell width for [`CertifyMethod::FullGrid`] and the
/// smallest width branch and bound may split down to.
pub fn certify_theorem(target: f64, method: CertifyMethod, resolution: f64) -> Result<Certificate, BoundsError> {
    if !(target > 0.0 && target <= 0.25) {
        return Err(BoundsError::InvalidArgument(format!("target {target} not in (0, 0.25]")));
    }
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(BoundsError::InvalidArgument(format!("resolution {resolution} must be positive")));
    }
    let (a, b) = (k1_alpha(), k1_beta());
    Ok(match method {
        CertifyMethod::FullGrid => full_grid(target, a, b, resolution),
        CertifyMethod::BranchAndBound => branch_and_bound(target, a, b, resolution),
    })
}

fn full_grid(target: f64, a: Interval, b: Interval, resolution: f64) -> Certificate {
    let na = (a.width() / resolution).ceil().max(1.0) as u64;
    let nb = (b.width() / resolution).ceil().max(1.0) as u64;
    let (sa, sb) = (a.width() / na as f64, b.width() / nb as f64);
    let min_center = (0..na)
        .into_par_iter()
        .map(|i| {
            let alpha = a.lo + (i as f64 + 0.5) * sa;
            (0..nb)
                .map(|j| p_bound(alpha, b.lo + (j as f64 + 0.5) * sb))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    let certified_min = min_center - slack(sa, sb);
    Certificate {
        target,
        certified_min,
        cells_examined: na * nb,
        max_depth: 0,
        method: CertifyMethod::FullGrid,
        status: if certified_min >= target {
            CertificateStatus::Certified
        } else {
            CertificateStatus::Failed
        },
    }
}

struct Cell {
    a: Interval,
    b: Interval,
    depth: u32,
    /// Lower bound inherited from the parent.
    parent_lb: f64,
}

/// Depth-first, low half first. Each cell is cleared when its center value
/// minus slack reaches the target, or split along its wider side (α on ties).
fn branch_and_bound(target: f64, a: Interval, b: Interval, resolution: f64) -> Certificate {
    let mut stack = vec![Cell {
        a,
        b,
        depth: 0,
        parent_lb: f64::NEG_INFINITY,
    }];
    let mut examined = 0u64;
    let mut max_depth = 0u32;
    let mut leaf_min = f64::INFINITY;

    let failed = |lb: f64, leaf_min: f64, stack: &[Cell], examined: u64, max_depth: u32| {
        let pending = stack.iter().map(|c| c.parent_lb).fold(f64::INFINITY, f64::min);
        Certificate {
            target,
            certified_min: lb.min(leaf_min).min(pending),
            cells_examined: examined,
            max_depth,
            method: CertifyMethod::BranchAndBound,
            status: CertificateStatus::Failed,
        }
    };

    while let Some(cell) = stack.pop() {
        examined += 1;
        max_depth = max_depth.max(cell.depth);
        let center = p_bound(cell.a.mid(), cell.b.mid());
        let lb = center - slack(cell.a.width(), cell.b.width());
        if lb >= target {
            leaf_min = leaf_min.min(lb);
            continue;
        }
        // A center below the target is a counterexample; no refinement can help.
        let too_fine = cell.a.width().max(cell.b.width()) < resolution;
        if center < target || too_fine || examined >= BNB_MAX_CELLS {
            return failed(lb, leaf_min, &stack, examined, max_depth);
        }
        let depth = cell.depth + 1;
        let (lo, hi) = if cell.a.width() >= cell.b.width() {
            let m = cell.a.mid();
            (
                (Interval::new(cell.a.lo, m), cell.b),
                (Interval::new(m, cell.a.hi), cell.b),
            )
        } else {
            let m = cell.b.mid();
            (
                (cell.a, Interval::new(cell.b.lo, m)),
                (cell.a, Interval::new(m, cell.b.hi)),
            )
        };
        stack.push(Cell {
            a: hi.0,
            b: hi.1,
            depth,
            parent_lb: lb,
        });
        stack.push(Cell {
            a: lo.0,
            b: lo.1,
            depth,
            parent_lb: lb,
        });
    }
    Certificate {
        target,
        certified_min: leaf_min,
        cells_examined: examined,
        max_depth,
        method: CertifyMethod::BranchAndBound,
        status: CertificateStatus::Certified,
    }
}

/// Grid-search error estimate for coordinate step `d1` and angle step `d2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBound {
    pub d1: f64,
    pub d2: f64,
    /// Largest vertex displacement between a configuration and its nearest grid node.
    pub delta: f64,
    /// `delta * PERIMETER_D + pi * delta^2`.
    pub exact_bound: f64,
    /// First-order form `2.44916 d1 + 0.49993 d2`.
    pub linear_bound: f64,
}

impl ErrorBound {
    /// First-order part of `exact_bound`.
    pub fn first_order(&self) -> f64 {
        self.delta * PERIMETER_D
    }
}

/// Moving each center by at most `d1/2` per coordinate shifts vertices by
/// `d1/√2`; turning by at most `d2/2` moves a vertex at radius `ρ` by
/// `2ρ sin(d2/4)`, which is largest for the triangle (`ρ = √3/6`).
pub fn grid_error_bound(d1: f64, d2: f64) -> Result<ErrorBound, BoundsError> {
    if !(d1 >= 0.0 && d2 >= 0.0 && d1.is_finite() && d2.is_finite()) {
        return Err(BoundsError::InvalidArgument(format!("grid steps must be non-negative, got ({d1}, {d2})")));
    }
    let delta = d1 / SQRT_2 + (d2 / 4.0).sin() / 3f64.sqrt();
    Ok(ErrorBound {
        d1,
        d2,
        delta,
        exact_bound: delta * PERIMETER_D + PI * delta * delta,
        linear_bound: ERROR_SLOPE_D1 * d1 + ERROR_SLOPE_D2 * d2,
    })
}

/// Perimeter of `{|y| ≤ 0.46} ∩ {x² + y² ≤ 1} ∩ {(x − 1)² + y² ≤ 1}`:
/// two flat edges plus four arcs of half-angle `asin(0.46)`.
pub fn domain_d_perimeter() -> f64 {
    let y = crate::configuration::K2_Y_LIMIT;
    2.0 * (2.0 * (1.0 - y * y).sqrt() - 1.0) + 4.0 * y.asin()
}

/// Area of the convex hull of a disk of radius `r` and a point at distance `d` from its center.
pub fn circle_point_hull_area(d: f64, r: f64) -> Result<f64, BoundsError> {
    if !(r > 0.0 && d >= r && d.is_finite()) {
        return Err(BoundsError::InvalidArgument(format!("need d >= r > 0, got d = {d}, r = {r}")));
    }
    let kite = r * (d * d - r * r).sqrt();
    Ok(kite + r * r * (PI - (r / d).acos()))
}

/// Smallest center distance at which the disk-plus-point hull reaches `target_area`.
pub fn safe_center_radius(r: f64, target_area: f64) -> Result<f64, BoundsError> {
    if !(r > 0.0 && r.is_finite()) || !target_area.is_finite() || target_area <= PI * r * r {
        return Err(BoundsError::InvalidArgument(format!(
            "need r > 0 and target > pi r^2, got r = {r}, target = {target_area}"
        )));
    }
    let area = |d: f64| circle_point_hull_area(d, r).expect("d >= r during bisection");
    let (mut lo, mut hi) = (r, 2.0 * r);
    while area(hi) < target_area {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-13 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if area(mid) >= target_area {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
