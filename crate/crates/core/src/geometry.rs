//! Planar primitives measured against the fixed unit segment from `(0,0)` to `(1,0)`.
//!
//! Hulls are built with Andrew's monotone chain. Collinear boundary points are
//! dropped and the vertex ring starts at the lexicographically smallest vertex,
//! so two hulls of the same point set compare equal with `==`.

use std::ops::{Add, Mul, Neg, Sub};

use arrayvec::ArrayVec;
use thiserror::Error;

/// Largest point set accepted by [`convex_hull`].
pub const MAX_HULL_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite coordinate ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("too many points for hull: {0} > {MAX_HULL_POINTS}")]
    TooManyPoints(usize),
    #[error("reference vector has zero length")]
    ZeroVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(GeometryError::NonFinite(x, y))
        }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dist(&self, other: Point) -> f64 {
        (*self - other).norm()
    }
}

/// The endpoints of the unit segment.
pub const E: Point = Point::new(0.0, 0.0);
pub const F: Point = Point::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Vector {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vector { x, y }
    }

    #[inline]
    pub fn polar(len: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vector::new(len * c, len * s)
    }

    #[inline]
    pub fn cross(self, other: Vector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Sub for Point {
    type Output = Vector;
    #[inline]
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Add for Vector {
    type Output = Vector;
    #[inline]
    fn add(self, rhs: Vector) -> Vector {
        Vector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Neg for Vector {
    type Output = Vector;
    #[inline]
    fn neg(self) -> Vector {
        Vector::new(-self.x, -self.y)
    }
}

impl Mul<Vector> for f64 {
    type Output = Vector;
    #[inline]
    fn mul(self, rhs: Vector) -> Vector {
        Vector::new(self * rhs.x, self * rhs.y)
    }
}

/// Twice the signed area of triangle `abc`; positive for a left turn.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Counterclockwise vertex ring of a convex polygon in canonical form.
///
/// Invariants: every consecutive triple turns strictly left, and the ring
/// starts at the lexicographically smallest `(x, y)` vertex. Rings of 0, 1 or
/// 2 vertices are allowed and have zero area.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        polygon_area(self)
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        if n < 2 {
            return 0.0;
        }
        if n == 2 {
            return 2.0 * self.vertices[0].dist(self.vertices[1]);
        }
        (0..n)
            .map(|i| self.vertices[i].dist(self.vertices[(i + 1) % n]))
            .sum()
    }

    /// Closed containment (boundary counts), exact sign tests.
    pub fn contains(&self, p: Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => v[0] == p,
            2 => on_segment(v[0], v[1], p),
            n => (0..n).all(|i| orient(v[i], v[(i + 1) % n], p) >= 0.0),
        }
    }
}

/// Sorts in place by `(x, y)`. Insertion sort: the hot path only ever sees 9 points.
#[inline]
fn sort_lex(pts: &mut [Point]) {
    for i in 1..pts.len() {
        let p = pts[i];
        let mut j = i;
        while j > 0 && lex_less(p, pts[j - 1]) {
            pts[j] = pts[j - 1];
            j -= 1;
        }
        pts[j] = p;
    }
}

#[inline]
fn lex_less(a: Point, b: Point) -> bool {
    a.x < b.x || (a.x == b.x && a.y < b.y)
}

/// Monotone chain over an already sorted slice. The returned ring starts at
/// `sorted[0]` and goes counterclockwise; collinear and duplicate points are
/// dropped (a turn must be strictly positive to survive).
#[inline]
fn monotone_chain(sorted: &[Point]) -> ArrayVec<Point, { 2 * MAX_HULL_POINTS + 1 }> {
    let mut hull: ArrayVec<Point, { 2 * MAX_HULL_POINTS + 1 }> = ArrayVec::new();
    let n = sorted.len();
    if n <= 1 {
        hull.extend(sorted.iter().copied());
        return hull;
    }
    for &p in sorted {
        while hull.len() >= 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while hull.len() >= lower && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    // last point repeats the first
    hull.pop();
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull
}

/// Shoelace sum over a counterclockwise ring.
#[inline]
fn shoelace(ring: &[Point]) -> f64 {
    let n = ring.len();
    if n < 3 {
        return 0.0;
    }
    let mut twice = 0.0;
    for i in 0..n {
        let a = ring[i];
        let b = ring[if i + 1 == n { 0 } else { i + 1 }];
        twice += a.x * b.y - b.x * a.y;
    }
    0.5 * twice
}

/// Area of the convex hull of a small point set, without allocating.
///
/// This is the routine behind both [`convex_hull`] + [`polygon_area`] and the
/// search kernels, so all of them return bit-identical areas for the same input.
#[inline]
pub(crate) fn hull_area_of<const N: usize>(mut pts: [Point; N]) -> f64 {
    sort_lex(&mut pts);
    shoelace(&monotone_chain(&pts))
}

pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon, GeometryError> {
    if points.len() > MAX_HULL_POINTS {
        return Err(GeometryError::TooManyPoints(points.len()));
    }
    if let Some(p) = points.iter().find(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinite(p.x, p.y));
    }
    let mut sorted: ArrayVec<Point, MAX_HULL_POINTS> = points.iter().copied().collect();
    sort_lex(&mut sorted);
    Ok(ConvexPolygon {
        vertices: monotone_chain(&sorted).to_vec(),
    })
}

pub fn polygon_area(poly: &ConvexPolygon) -> f64 {
    shoelace(&poly.vertices)
}

/// Height of `v` with respect to `u`: `|v| sin θ = |u × v| / |u|`.
pub fn height(u: Vector, v: Vector) -> Result<f64, GeometryError> {
    let len = u.norm();
    if len == 0.0 {
        return Err(GeometryError::ZeroVector);
    }
    Ok(u.cross(v).abs() / len)
}

/// Euclidean distance from `p` to the closed unit segment.
#[inline]
pub fn point_segment_distance(p: Point) -> f64 {
    let t = p.x.clamp(0.0, 1.0);
    (p.x - t).hypot(p.y)
}

/// `p` lies on the closed segment `ab` (exact test).
fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0.0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Closed segments `ab` and `cd` share a point. Zero orientations count as touching.
fn segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))
        && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))
    {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

/// Whether the closed polygon (boundary and interior) meets the closed unit segment.
pub fn segment_polygon_intersects(poly: &ConvexPolygon) -> bool {
    ring_meets_unit_segment(poly.vertices())
}

/// Same test on a raw counterclockwise ring, used by the configuration filters.
pub(crate) fn ring_meets_unit_segment(ring: &[Point]) -> bool {
    let n = ring.len();
    match n {
        0 => return false,
        1 => return on_segment(E, F, ring[0]),
        _ => {}
    }
    // All vertices strictly on one side of the x-axis: no contact.
    if ring.iter().all(|p| p.y > 0.0) || ring.iter().all(|p| p.y < 0.0) {
        return false;
    }
    let inside = |p: Point| n >= 3 && (0..n).all(|i| orient(ring[i], ring[(i + 1) % n], p) >= 0.0);
    if inside(E) || inside(F) {
        return true;
    }
    (0..n).any(|i| segments_meet(ring[i], ring[(i + 1) % n], E, F))
}
