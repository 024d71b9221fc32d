#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wormbound::{Config, Point};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn dist2(a: Point, b: Point) -> f64 {
    (a.x - b.x).powi(2) + (a.y - b.y).powi(2)
}

/// Jarvis march. Strict hull vertices, counterclockwise from the
/// lexicographically smallest point; collinear boundary points are skipped.
pub fn gift_wrap(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    for p in points {
        if !pts.contains(p) {
            pts.push(*p);
        }
    }
    if pts.len() <= 1 {
        return pts;
    }
    let start = *pts
        .iter()
        .min_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)))
        .unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut next = if pts[0] == cur { pts[1] } else { pts[0] };
        for &q in &pts {
            if q == cur {
                continue;
            }
            let c = cross(cur, next, q);
            // q is clockwise of next, or collinear and farther
            if c < 0.0 || (c == 0.0 && dist2(cur, q) > dist2(cur, next)) {
                next = q;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        cur = next;
        if hull.len() > pts.len() {
            panic!("gift wrapping did not close");
        }
    }
    hull
}

/// Area by fanning triangles from the first vertex.
pub fn fan_area(ring: &[Point]) -> f64 {
    if ring.len() < 3 {
        return 0.0;
    }
    (1..ring.len() - 1)
        .map(|i| 0.5 * cross(ring[0], ring[i], ring[i + 1]))
        .sum::<f64>()
        .abs()
}

/// Brute-force hull of a configuration: the nine points written out by hand.
pub fn oracle_points(c: &Config) -> Vec<Point> {
    let rs = 2f64.sqrt() / 6.0;
    let rt = 3f64.sqrt() / 6.0;
    let mut v = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
    for k in 0..4 {
        let a = c.alpha + k as f64 * FRAC_PI_2;
        v.push(Point::new(c.x1 + rs * a.cos(), c.y1 + rs * a.sin()));
    }
    for k in 0..3 {
        let b = c.beta + k as f64 * 2.0 * PI / 3.0;
        v.push(Point::new(c.x2 + rt * b.cos(), c.y2 + rt * b.sin()));
    }
    v
}

pub fn oracle_mu(c: &Config) -> f64 {
    fan_area(&gift_wrap(&oracle_points(c)))
}

/// Centers near the segment, canonical angles.
pub fn random_config<R: Rng>(r: &mut R) -> Config {
    Config::try_new(
        r.gen_range(-0.4..1.4),
        r.gen_range(-0.4..0.4),
        r.gen_range(0.0..FRAC_PI_2),
        r.gen_range(-0.4..1.4),
        r.gen_range(-0.4..0.4),
        r.gen_range(0.0..2.0 * PI / 3.0),
    )
    .unwrap()
}

/// Uniform in a box.
pub fn random_in<R: Rng>(r: &mut R, b: &wormbound::DomainBox) -> Config {
    let v = b.intervals().map(|iv| if iv.width() > 0.0 { r.gen_range(iv.lo..=iv.hi) } else { iv.lo });
    Config::try_from_slice(&v).unwrap()
}

/// Rejection sample of a configuration in K1 and K2.
pub fn random_k1_k2<R: Rng>(r: &mut R) -> Config {
    let d = wormbound::search_domain();
    loop {
        let c = random_in(r, &d);
        if wormbound::in_k1(&c) && wormbound::in_k2(&c) {
            return c;
        }
    }
}

/// Monotone chain for large point sets, used for dense polygon references.
pub fn big_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let turn = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn ring_area(ring: &[(f64, f64)]) -> f64 {
    let n = ring.len();
    (0..n)
        .map(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % n]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum::<f64>()
        .abs()
        / 2.0
}

/// Surface over a box symmetric about (1/2, 0), merged over both triangle
/// angle windows exchanged by the half turn.
pub fn symmetric_surface() -> wormbound::SurfaceGrid {
    let b = wormbound::DomainBox {
        x1: wormbound::Interval::new(0.3, 0.7),
        y1: wormbound::Interval::new(-0.1, 0.1),
        alpha: wormbound::configuration::k1_alpha(),
        x2: wormbound::Interval::new(0.3, 0.7),
        y2: wormbound::Interval::new(-0.1, 0.1),
        beta: wormbound::configuration::k1_beta(),
    };
    let turned = wormbound::DomainBox {
        beta: b.beta.shifted(-wormbound::configuration::TRIANGLE_PERIOD / 2.0),
        ..b
    };
    let (d1, d2) = (0.05, 0.05);
    // one cell per (x2, y2) node keeps every node off the cell boundaries
    let mut s = wormbound::surface_min(b, (9, 5), d1, d2).unwrap();
    s.merge(&wormbound::surface_min(turned, (9, 5), d1, d2).unwrap()).unwrap();
    s
}

