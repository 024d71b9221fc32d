mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand::Rng;
use wormbound::configuration::{segment_square_area, segment_triangle_area, SQUARE_PERIOD, TRIANGLE_PERIOD};
use wormbound::{
    apply_symmetry, canonicalize, config_points, in_k1, in_k2, mu, search_domain, square_vertices, triangle_vertices,
    Config, Point, SymmetryKind,
};

use common::{oracle_mu, random_config, random_in, rng};

fn same_set(a: &[Point], b: &[Point], tol: f64) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| p.dist(*q) < tol))
}

/// Distance between two angles on a circle of the given period.
fn angle_gap(a: f64, b: f64, period: f64) -> f64 {
    let d = (a - b).rem_euclid(period);
    d.min(period - d)
}

#[test]
fn mu_matches_brute_force_oracle() {
    let c = Config::try_new(0.5, 0.0, FRAC_PI_4, 0.5, 0.0, FRAC_PI_2).unwrap();
    assert!((mu(&c) - oracle_mu(&c)).abs() < 1e-15);
    let mut r = rng(10);
    for _ in 0..10_000 {
        let c = random_config(&mut r);
        assert!((mu(&c) - oracle_mu(&c)).abs() < 1e-12, "{c:?}");
    }
}

#[test]
fn shapes_are_regular() {
    let mut r = rng(11);
    for _ in 0..1_000 {
        let c = random_config(&mut r);
        let s = square_vertices(c.x1, c.y1, c.alpha + r.gen_range(-10.0..10.0));
        for k in 0..4 {
            assert!((s[k].dist(s[(k + 1) % 4]) - 1.0 / 3.0).abs() < 1e-14);
        }
        assert!((s[0].dist(s[2]) - 2f64.sqrt() / 3.0).abs() < 1e-14);
        assert!((s[1].dist(s[3]) - 2f64.sqrt() / 3.0).abs() < 1e-14);
        let t = triangle_vertices(c.x2, c.y2, c.beta);
        for k in 0..3 {
            assert!((t[k].dist(t[(k + 1) % 3]) - 0.5).abs() < 1e-14);
            assert!((t[(k + 1) % 3] - t[k]).cross(t[(k + 2) % 3] - t[k]) > 0.0);
        }
        let p = config_points(&c);
        assert_eq!((p[0], p[1]), (Point::new(0.0, 0.0), Point::new(1.0, 0.0)));
        assert!(p.iter().all(|q| q.is_finite()));
    }
}

#[test]
fn symmetries_preserve_area() {
    let mut r = rng(12);
    for _ in 0..10_000 {
        let c = random_config(&mut r);
        let a = mu(&c);
        for s in SymmetryKind::ALL {
            let d = apply_symmetry(&c, s);
            assert!((mu(&d) - a).abs() <= 1e-12, "{s:?} {c:?}");
        }
    }
}

#[test]
fn symmetries_are_involutions() {
    let mut r = rng(13);
    for _ in 0..1_000 {
        let c = random_config(&mut r);
        for s in SymmetryKind::ALL {
            let back = apply_symmetry(&apply_symmetry(&c, s), s);
            assert!((back.x1 - c.x1).abs() < 1e-12 && (back.y1 - c.y1).abs() < 1e-12);
            assert!((back.x2 - c.x2).abs() < 1e-12 && (back.y2 - c.y2).abs() < 1e-12);
            assert!(angle_gap(back.alpha, c.alpha, SQUARE_PERIOD) < 1e-12);
            assert!(angle_gap(back.beta, c.beta, TRIANGLE_PERIOD) < 1e-12);
        }
    }
}

#[test]
fn symmetry_images_map_vertex_sets() {
    let mut r = rng(14);
    for _ in 0..1_000 {
        let c = random_config(&mut r);
        for s in SymmetryKind::ALL {
            let d = apply_symmetry(&c, s);
            let moved: Vec<Point> = config_points(&c).iter().map(|p| s.apply(*p)).collect();
            assert!(same_set(&moved, &config_points(&d), 1e-12), "{s:?} {c:?}");
        }
    }
}

#[test]
fn canonicalize_keeps_vertices() {
    let mut r = rng(15);
    for _ in 0..1_000 {
        let c = Config::try_new(
            r.gen_range(-1.0..2.0),
            r.gen_range(-1.0..1.0),
            r.gen_range(-20.0..20.0),
            r.gen_range(-1.0..2.0),
            r.gen_range(-1.0..1.0),
            r.gen_range(-20.0..20.0),
        )
        .unwrap();
        let k = canonicalize(&c);
        assert!((0.0..SQUARE_PERIOD).contains(&k.alpha) && (0.0..TRIANGLE_PERIOD).contains(&k.beta));
        assert!(same_set(&config_points(&c), &config_points(&k), 1e-12));
        assert_eq!(canonicalize(&k), k);
    }
    let c = Config::try_new(0.0, 0.0, PI, 0.0, 0.0, 5.0 * PI / 3.0).unwrap();
    let k = canonicalize(&c);
    assert_eq!(k.alpha, 0.0);
    assert!((k.beta - PI / 3.0).abs() < 1e-15);
}

#[test]
fn area_exceeds_each_shape() {
    let mut r = rng(16);
    for _ in 0..10_000 {
        let c = random_config(&mut r);
        let a = mu(&c);
        assert!(a >= 1.0 / 9.0 - 1e-15);
        assert!(a >= 3f64.sqrt() / 16.0 - 1e-15);
        assert!(a >= segment_square_area(&square_vertices(c.x1, c.y1, c.alpha)) - 1e-15);
        assert!(a >= segment_triangle_area(&triangle_vertices(c.x2, c.y2, c.beta)) - 1e-15);
    }
}

#[test]
fn lowering_a_floating_square_never_grows_the_hull() {
    let mut r = rng(17);
    let mut tested = 0;
    while tested < 1_000 {
        let c = random_config(&mut r);
        let s = square_vertices(c.x1, c.y1, c.alpha);
        let low = s.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        if !(low > 0.0 && s.iter().all(|p| (0.0..=1.0).contains(&p.x))) {
            continue;
        }
        let lowered = Config { y1: c.y1 - low, ..c };
        assert!(mu(&lowered) <= mu(&c) + 1e-12, "{c:?}");
        tested += 1;
    }
}

#[test]
fn search_domain_holds_every_k1_k2_configuration() {
    let d = search_domain();
    let wide = wormbound::DomainBox {
        x1: wormbound::Interval::new(-0.6, 1.6),
        y1: wormbound::Interval::new(-0.4, 0.4),
        alpha: d.alpha,
        x2: wormbound::Interval::new(-0.6, 1.6),
        y2: wormbound::Interval::new(-0.4, 0.4),
        beta: d.beta,
    };
    let mut r = rng(18);
    let mut hits = 0;
    for _ in 0..100_000 {
        let c = random_in(&mut r, &wide);
        if in_k1(&c) && in_k2(&c) {
            hits += 1;
            assert!(d.contains(&c), "{c:?}");
        }
    }
    assert!(hits > 5_000, "only {hits} samples landed in K1 and K2");
    assert!((d.x1.width() - (1.0 + 2f64.sqrt() / 3.0)).abs() < 1e-15);
    assert!((d.y2.width() - 3f64.sqrt() / 3.0).abs() < 1e-15);
}

#[test]
fn k2_examples() {
    let c = Config::try_new(0.5, 0.0, FRAC_PI_4, 0.5, 0.0, FRAC_PI_2).unwrap();
    assert!(in_k2(&c));
    for a in [0.0, 0.3, 0.7, 1.2] {
        assert!(!in_k2(&Config { y1: 0.4, alpha: a, ..c }));
    }
    assert!(!in_k2(&Config { y2: 0.3, ..c }));
}
