mod common;

use wormbound::io::{read_surface_csv, render_heatmap_svg, surface_rows, write_surface_csv, SurfaceRow};

/// `(x2, y2, fill)` of every data rectangle.
fn cells(svg: &str) -> Vec<(f64, f64, [u8; 3])> {
    svg.lines()
        .filter(|l| l.contains(r#"class="cell""#))
        .map(|l| {
            let attr = |name: &str| {
                let key = format!(r#"{name}=""#);
                let start = l.find(&key).unwrap() + key.len();
                let end = start + l[start..].find('"').unwrap();
                l[start..end].to_string()
            };
            let fill = attr("fill");
            let byte = |k: usize| u8::from_str_radix(&fill[1 + 2 * k..3 + 2 * k], 16).unwrap();
            (
                attr("data-x2").parse().unwrap(),
                attr("data-y2").parse().unwrap(),
                [byte(0), byte(1), byte(2)],
            )
        })
        .collect()
}

#[test]
fn colors_respect_half_turn_symmetry() {
    let rows = surface_rows(&common::symmetric_surface());
    let svg = render_heatmap_svg(&rows).unwrap();
    let found = cells(&svg);
    assert_eq!(found.len(), rows.len());
    for &(x, y, fill) in &found {
        let (_, _, img) = found
            .iter()
            .min_by(|a, b| {
                let da = (a.0 - (1.0 - x)).abs() + (a.1 + y).abs();
                let db = (b.0 - (1.0 - x)).abs() + (b.1 + y).abs();
                da.total_cmp(&db)
            })
            .unwrap();
        for k in 0..3 {
            assert!(fill[k].abs_diff(img[k]) <= 1, "({x}, {y}): {fill:?} vs {img:?}");
        }
    }
}

#[test]
fn single_cell_gives_one_rectangle() {
    let row = SurfaceRow {
        x2: 0.74,
        y2: 0.13,
        min_area: 0.2276,
        x1: 0.66,
        y1: 0.19,
        alpha: 1.3,
        x2_arg: 0.741,
        y2_arg: 0.127,
        beta: 1.64,
    };
    let svg = render_heatmap_svg(&[row]).unwrap();
    assert_eq!(cells(&svg).len(), 1);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("x₂") && svg.contains("y₂") && svg.contains(r#"class="legend""#));
}

#[test]
fn surface_csv_round_trips() {
    let s = common::symmetric_surface();
    let mut buf = Vec::new();
    write_surface_csv(&s, &mut buf).unwrap();
    let rows = read_surface_csv(buf.as_slice()).unwrap();
    assert_eq!(rows, surface_rows(&s));
    for (row, (i, j, cell)) in rows.iter().zip(s.iter()) {
        assert_eq!((row.x2, row.y2), s.cell_center(i, j));
        assert_eq!(row.argmin(), cell.argmin);
    }
}
