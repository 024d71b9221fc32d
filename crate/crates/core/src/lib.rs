//! Lower bounds and minimal-area search for convex regions holding a unit
//! segment, an equilateral triangle of side 1/2 and a square of side 1/3.
//!
//! Any convex cover for unit arcs contains all three shapes, so the smallest
//! hull over their relative placements bounds the worm problem from below.
//!
//! * [`geometry`]: hulls, areas, heights, segment predicates.
//! * [`configuration`]: the 6-parameter placements, symmetries, K1/K2 filters.
//! * [`bounds`]: closed-form angle bounds, their certification, grid-error estimates.
//! * [`search`]: grid search, zoom plans, surfaces, and the two-angle pivot search.
//! * [`io`]: surface CSV and SVG heatmaps.
//! * [`cli`]: the `wormbound` command line.

pub mod bounds;
pub mod cli;
pub mod configuration;
pub mod geometry;
pub mod io;
pub mod search;

pub use bounds::{
    bound_breakdown, certify_theorem, circle_point_hull_area, domain_d_perimeter, grid_error_bound,
    safe_center_radius, BoundBreakdown, Certificate, CertificateStatus, CertifyMethod, ErrorBound,
};
pub use configuration::{
    apply_symmetry, canonicalize, config_points, in_k1, in_k2, mu, search_domain, square_vertices,
    triangle_vertices, Config, DomainBox, Interval, SymmetryKind,
};
pub use geometry::{convex_hull, height, point_segment_distance, polygon_area, segment_polygon_intersects};
pub use geometry::{ConvexPolygon, Point, Vector};
pub use search::{
    conjecture_search, grid_search, pivot_config, run_plan, surface_min, PivotParams, SearchPlan, SearchResult,
    Stage, SurfaceGrid,
};
