//! Placements of the unit segment, the side-1/2 equilateral triangle and the
//! side-1/3 square.
//!
//! The segment is pinned to `(0,0)–(1,0)`. The square is given by its center
//! and the direction `alpha` of its first vertex, the triangle by its centroid
//! and the direction `beta` of its first vertex. Angles are radians throughout.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{hull_area_of, point_segment_distance, ring_meets_unit_segment, Point, Vector, E, F};

/// Circumradius of the square of side 1/3.
pub const SQUARE_RADIUS: f64 = std::f64::consts::SQRT_2 / 6.0;
/// Circumradius of the equilateral triangle of side 1/2.
pub const TRIANGLE_RADIUS: f64 = 0.288_675_134_594_812_9; // sqrt(3)/6
/// Rotational period of the square.
pub const SQUARE_PERIOD: f64 = FRAC_PI_2;
/// Rotational period of the triangle.
pub const TRIANGLE_PERIOD: f64 = 2.0 * FRAC_PI_3;

/// Configurations with a shape point above this height (or below its negative) are never minimal.
pub const K2_Y_LIMIT: f64 = 0.46;
/// Configurations with a shape point farther than this from the segment are never minimal.
pub const K2_DISTANCE_LIMIT: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("configuration has a non-finite parameter: {0:?}")]
    NonFinite([f64; 6]),
    #[error("expected 6 parameters, got {0}")]
    WrongArity(usize),
    #[error("invalid interval [{lo}, {hi}] for {name}")]
    BadInterval { name: &'static str, lo: f64, hi: f64 },
}

/// The 6-tuple `(x1, y1, alpha, x2, y2, beta)`.
///
/// Angles are stored as given; [`canonicalize`] reduces them to one period.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub x1: f64,
    pub y1: f64,
    pub alpha: f64,
    pub x2: f64,
    pub y2: f64,
    pub beta: f64,
}

impl Config {
    pub fn try_new(x1: f64, y1: f64, alpha: f64, x2: f64, y2: f64, beta: f64) -> Result<Self, ConfigError> {
        Self::try_from_array([x1, y1, alpha, x2, y2, beta])
    }

    pub fn try_from_array(v: [f64; 6]) -> Result<Self, ConfigError> {
        if v.iter().all(|x| x.is_finite()) {
            Ok(Self::from_array(v))
        } else {
            Err(ConfigError::NonFinite(v))
        }
    }

    pub fn try_from_slice(v: &[f64]) -> Result<Self, ConfigError> {
        let arr: [f64; 6] = v.try_into().map_err(|_| ConfigError::WrongArity(v.len()))?;
        Self::try_from_array(arr)
    }

    pub(crate) const fn from_array(v: [f64; 6]) -> Self {
        Config {
            x1: v[0],
            y1: v[1],
            alpha: v[2],
            x2: v[3],
            y2: v[4],
            beta: v[5],
        }
    }

    pub const fn to_array(&self) -> [f64; 6] {
        [self.x1, self.y1, self.alpha, self.x2, self.y2, self.beta]
    }

    pub fn square_center(&self) -> Point {
        Point::new(self.x1, self.y1)
    }

    pub fn triangle_center(&self) -> Point {
        Point::new(self.x2, self.y2)
    }

    /// Total order on the parameter tuple, used for tie-breaking.
    pub fn lex_cmp(&self, other: &Config) -> std::cmp::Ordering {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

#[inline]
fn regular_vertices<const N: usize>(center: Point, radius: f64, phase: f64) -> [Point; N] {
    let step = 2.0 * PI / N as f64;
    std::array::from_fn(|k| center + Vector::polar(radius, phase + k as f64 * step))
}

/// Square vertices `A, B, C, D`, counterclockwise from the vertex in direction `alpha`.
#[inline]
pub fn square_vertices(x1: f64, y1: f64, alpha: f64) -> [Point; 4] {
    regular_vertices(Point::new(x1, y1), SQUARE_RADIUS, alpha)
}

/// Triangle vertices `P, Q, R`, counterclockwise from the vertex in direction `beta`.
#[inline]
pub fn triangle_vertices(x2: f64, y2: f64, beta: f64) -> [Point; 3] {
    regular_vertices(Point::new(x2, y2), TRIANGLE_RADIUS, beta)
}

/// `[E, F, A, B, C, D, P, Q, R]`.
#[inline]
pub fn config_points(c: &Config) -> [Point; 9] {
    let s = square_vertices(c.x1, c.y1, c.alpha);
    let t = triangle_vertices(c.x2, c.y2, c.beta);
    [E, F, s[0], s[1], s[2], s[3], t[0], t[1], t[2]]
}

#[inline]
pub(crate) fn points_of(square: &[Point; 4], triangle: &[Point; 3]) -> [Point; 9] {
    [E, F, square[0], square[1], square[2], square[3], triangle[0], triangle[1], triangle[2]]
}

/// Area of the convex hull of the configuration.
#[inline]
pub fn mu(c: &Config) -> f64 {
    hull_area_of(config_points(c))
}

/// Area of the hull of the segment and the square alone.
#[inline]
pub fn segment_square_area(square: &[Point; 4]) -> f64 {
    hull_area_of([E, F, square[0], square[1], square[2], square[3]])
}

/// Area of the hull of the segment and the triangle alone.
#[inline]
pub fn segment_triangle_area(triangle: &[Point; 3]) -> f64 {
    hull_area_of([E, F, triangle[0], triangle[1], triangle[2]])
}

/// Reduces `angle` into `[0, period)`.
#[inline]
pub fn reduce_angle(angle: f64, period: f64) -> f64 {
    let r = angle.rem_euclid(period);
    if r >= period {
        0.0
    } else {
        r
    }
}

pub fn canonicalize(c: &Config) -> Config {
    Config {
        alpha: reduce_angle(c.alpha, SQUARE_PERIOD),
        beta: reduce_angle(c.beta, TRIANGLE_PERIOD),
        ..*c
    }
}

/// Isometries of the plane that map the unit segment onto itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryKind {
    /// Mirror in the line `x = 1/2`.
    ReflectHalfX,
    /// Rotation by 180 degrees about `(1/2, 0)`.
    HalfTurn,
    /// Mirror in the x-axis.
    ReflectXAxis,
}

impl SymmetryKind {
    pub const ALL: [SymmetryKind; 3] = [SymmetryKind::ReflectHalfX, SymmetryKind::HalfTurn, SymmetryKind::ReflectXAxis];

    pub fn apply(self, p: Point) -> Point {
        match self {
            SymmetryKind::ReflectHalfX => Point::new(1.0 - p.x, p.y),
            SymmetryKind::HalfTurn => Point::new(1.0 - p.x, -p.y),
            SymmetryKind::ReflectXAxis => Point::new(p.x, -p.y),
        }
    }
}

/// Parameters of the image configuration under `s`, with canonical angles.
///
/// The angles are read off the transformed vertex set: the first vertex is
/// mapped along with the center and its direction is reduced modulo the
/// shape's rotational period. Reflections reverse the vertex order, but any
/// vertex gives the same reduced angle.
pub fn apply_symmetry(c: &Config, s: SymmetryKind) -> Config {
    let image = |center: Point, first: Point, period: f64| {
        let center = s.apply(center);
        let first = s.apply(first);
        (center, reduce_angle((first - center).angle(), period))
    };
    let (sq, alpha) = image(
        c.square_center(),
        square_vertices(c.x1, c.y1, c.alpha)[0],
        SQUARE_PERIOD,
    );
    let (tr, beta) = image(
        c.triangle_center(),
        triangle_vertices(c.x2, c.y2, c.beta)[0],
        TRIANGLE_PERIOD,
    );
    Config {
        x1: sq.x,
        y1: sq.y,
        alpha,
        x2: tr.x,
        y2: tr.y,
        beta,
    }
}

/// Closed angle window of K1, in degrees: outside it one of the height bounds exceeds 0.23.
pub const K1_ALPHA_DEG: (f64, f64) = (45.0, 78.0);
pub const K1_BETA_DEG: (f64, f64) = (83.0, 97.0);

pub fn k1_alpha() -> Interval {
    Interval::new(K1_ALPHA_DEG.0.to_radians(), K1_ALPHA_DEG.1.to_radians())
}

pub fn k1_beta() -> Interval {
    Interval::new(K1_BETA_DEG.0.to_radians(), K1_BETA_DEG.1.to_radians())
}

pub fn in_k1(c: &Config) -> bool {
    let c = canonicalize(c);
    k1_alpha().contains(c.alpha) && k1_beta().contains(c.beta)
}

/// One shape's share of K2: every vertex within distance 1 of the segment and
/// inside `|y| <= 0.46`, and the closed shape touches the segment.
///
/// Checking vertices is enough for the first two conditions since both are
/// convex functions of the point.
#[inline]
pub fn shape_in_k2(ring: &[Point]) -> bool {
    ring.iter()
        .all(|p| p.y.abs() <= K2_Y_LIMIT && point_segment_distance(*p) <= K2_DISTANCE_LIMIT)
        && ring_meets_unit_segment(ring)
}

pub fn in_k2(c: &Config) -> bool {
    shape_in_k2(&square_vertices(c.x1, c.y1, c.alpha)) && shape_in_k2(&triangle_vertices(c.x2, c.y2, c.beta))
}

/// Closed interval `[lo, hi]`. Serialized as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl From<[f64; 2]> for Interval {
    fn from(v: [f64; 2]) -> Self {
        Interval { lo: v[0], hi: v[1] }
    }
}

impl From<Interval> for [f64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub const fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval, tol: f64) -> bool {
        other.lo >= self.lo - tol && other.hi <= self.hi + tol
    }

    pub fn shifted(&self, by: f64) -> Interval {
        Interval::new(self.lo + by, self.hi + by)
    }

    /// `[c - r, c + r]` intersected with `self`.
    pub fn clamp_window(&self, center: f64, radius: f64) -> Interval {
        Interval::new((center - radius).max(self.lo), (center + radius).min(self.hi))
    }
}

/// Axis-aligned box in the 6-parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainBox {
    pub x1: Interval,
    pub y1: Interval,
    pub alpha: Interval,
    pub x2: Interval,
    pub y2: Interval,
    pub beta: Interval,
}

pub const PARAM_NAMES: [&str; 6] = ["x1", "y1", "alpha", "x2", "y2", "beta"];

impl DomainBox {
    pub fn from_intervals(v: [Interval; 6]) -> Self {
        DomainBox {
            x1: v[0],
            y1: v[1],
            alpha: v[2],
            x2: v[3],
            y2: v[4],
            beta: v[5],
        }
    }

    pub fn intervals(&self) -> [Interval; 6] {
        [self.x1, self.y1, self.alpha, self.x2, self.y2, self.beta]
    }

    /// The degenerate box holding a single configuration.
    pub fn around(c: &Config) -> Self {
        Self::from_intervals(c.to_array().map(Interval::point))
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (iv, name) in self.intervals().iter().zip(PARAM_NAMES) {
            let period = match name {
                "alpha" => Some(SQUARE_PERIOD),
                "beta" => Some(TRIANGLE_PERIOD),
                _ => None,
            };
            let bad = !(iv.lo.is_finite() && iv.hi.is_finite())
                || iv.lo > iv.hi
                || period.is_some_and(|p| iv.width() > p);
            if bad {
                return Err(ConfigError::BadInterval {
                    name,
                    lo: iv.lo,
                    hi: iv.hi,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, c: &Config) -> bool {
        self.intervals()
            .iter()
            .zip(c.to_array())
            .all(|(iv, v)| iv.contains(v))
    }

    pub fn contains_box(&self, other: &DomainBox, tol: f64) -> bool {
        self.intervals()
            .iter()
            .zip(other.intervals().iter())
            .all(|(a, b)| a.contains_interval(b, tol))
    }

    pub fn center(&self) -> Config {
        Config::from_array(self.intervals().map(|iv| iv.mid()))
    }
}

/// Box holding every canonical configuration in K1 and K2.
///
/// Touching the segment puts each center within one circumradius of it; the
/// angle windows are those of K1.
pub fn search_domain() -> DomainBox {
    DomainBox {
        x1: Interval::new(-SQUARE_RADIUS, 1.0 + SQUARE_RADIUS),
        y1: Interval::new(-SQUARE_RADIUS, SQUARE_RADIUS),
        alpha: k1_alpha(),
        x2: Interval::new(-TRIANGLE_RADIUS, 1.0 + TRIANGLE_RADIUS),
        y2: Interval::new(-TRIANGLE_RADIUS, TRIANGLE_RADIUS),
        beta: k1_beta(),
    }
}
