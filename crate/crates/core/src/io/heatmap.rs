use std::fmt::Write;

use super::{IoError, SurfaceRow};

const PLOT_W: f64 = 560.0;
const PLOT_H: f64 = 400.0;
const LEFT: f64 = 70.0;
const TOP: f64 = 20.0;
const LEGEND_X: f64 = LEFT + PLOT_W + 30.0;
const LEGEND_W: f64 = 20.0;
const WIDTH: f64 = LEGEND_X + LEGEND_W + 90.0;
const HEIGHT: f64 = TOP + PLOT_H + 60.0;

/// Fallback cell width when an axis has a single distinct value.
const DEFAULT_CELL: f64 = 0.01;

// Viridis at t = 0, 0.25, 0.5, 0.75, 1.
const STOPS: [[f64; 3]; 5] = [
    [68.0, 1.0, 84.0],
    [59.0, 82.0, 139.0],
    [33.0, 145.0, 140.0],
    [94.0, 201.0, 98.0],
    [253.0, 231.0, 37.0],
];

fn color(t: f64) -> String {
    let t = t.clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let k = (t.floor() as usize).min(STOPS.len() - 2);
    let u = t - k as f64;
    let c: Vec<u8> = (0..3)
        .map(|i| (STOPS[k][i] + u * (STOPS[k + 1][i] - STOPS[k][i])).round() as u8)
        .collect();
    format!("#{:02x}{:02x}{:02x}", c[0], c[1], c[2])
}

/// Smallest gap between distinct sorted values, ignoring float noise.
fn min_gap(values: impl Iterator<Item = f64>) -> Option<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    let span = v.last()? - v.first()?;
    let eps = 1e-9 * span.max(1.0);
    v.windows(2).map(|w| w[1] - w[0]).filter(|&g| g > eps).min_by(f64::total_cmp)
}

fn fmt_num(v: f64) -> String {
    format!("{v:.6}")
}

/// SVG heatmap of cell minima over `(x2, y2)`: one `rect.cell` per row,
/// colored linearly from the smallest to the largest `min_area`.
pub fn render_heatmap_svg(rows: &[SurfaceRow]) -> Result<String, IoError> {
    if rows.is_empty() {
        return Err(IoError::Empty);
    }
    let gx = min_gap(rows.iter().map(|r| r.x2));
    let gy = min_gap(rows.iter().map(|r| r.y2));
    let cw = gx.or(gy).unwrap_or(DEFAULT_CELL);
    let ch = gy.or(gx).unwrap_or(DEFAULT_CELL);

    let fold = |f: fn(&SurfaceRow) -> f64| {
        rows.iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    };
    let (x0, x1) = fold(|r| r.x2);
    let (y0, y1) = fold(|r| r.y2);
    let (a0, a1) = fold(|r| r.min_area);
    let (x0, x1) = (x0 - cw / 2.0, x1 + cw / 2.0);
    let (y0, y1) = (y0 - ch / 2.0, y1 + ch / 2.0);
    let sx = PLOT_W / (x1 - x0);
    let sy = PLOT_H / (y1 - y0);
    let px = |x: f64| LEFT + (x - x0) * sx;
    let py = |y: f64| TOP + (y1 - y) * sy;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<defs><linearGradient id="scale" x1="0" y1="1" x2="0" y2="0">{}</linearGradient></defs>"#,
        (0..STOPS.len())
            .map(|k| {
                let t = k as f64 / (STOPS.len() - 1) as f64;
                format!(r#"<stop offset="{t}" stop-color="{}"/>"#, color(t))
            })
            .collect::<String>()
    );
    let _ = writeln!(s, r#"<g class="cells" shape-rendering="crispEdges">"#);
    for r in rows {
        let t = if a1 > a0 { (r.min_area - a0) / (a1 - a0) } else { 0.0 };
        let _ = writeln!(
            s,
            r#"<rect class="cell" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}" data-x2="{}" data-y2="{}" data-area="{}"/>"#,
            px(r.x2 - cw / 2.0),
            py(r.y2 + ch / 2.0),
            cw * sx,
            ch * sy,
            color(t),
            r.x2,
            r.y2,
            r.min_area
        );
    }
    let _ = writeln!(s, "</g>");

    // axes
    let (bx, by) = (LEFT, TOP + PLOT_H);
    let _ = writeln!(
        s,
        r#"<g class="axes" stroke="black"><line x1="{bx}" y1="{by}" x2="{}" y2="{by}"/><line x1="{bx}" y1="{TOP}" x2="{bx}" y2="{by}"/></g>"#,
        LEFT + PLOT_W
    );
    let _ = writeln!(
        s,
        r#"<text x="{bx}" y="{}" text-anchor="start">{}</text><text x="{}" y="{}" text-anchor="end">{}</text>"#,
        by + 16.0,
        fmt_num(x0),
        LEFT + PLOT_W,
        by + 16.0,
        fmt_num(x1)
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{by}" text-anchor="end">{}</text><text x="{}" y="{}" text-anchor="end">{}</text>"#,
        bx - 4.0,
        fmt_num(y0),
        bx - 4.0,
        TOP + 10.0,
        fmt_num(y1)
    );
    let _ = writeln!(
        s,
        r#"<text class="axis-label" x="{}" y="{}" text-anchor="middle">x₂</text>"#,
        LEFT + PLOT_W / 2.0,
        by + 40.0
    );
    let _ = writeln!(
        s,
        r#"<text class="axis-label" x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">y₂</text>"#,
        LEFT - 40.0,
        TOP + PLOT_H / 2.0,
        LEFT - 40.0,
        TOP + PLOT_H / 2.0
    );

    // legend
    let _ = writeln!(
        s,
        r#"<g class="legend"><rect x="{LEGEND_X}" y="{TOP}" width="{LEGEND_W}" height="{PLOT_H}" fill="url(#scale)" stroke="black"/><text x="{}" y="{}">{}</text><text x="{}" y="{}">{}</text><text x="{}" y="{}" text-anchor="middle">min area</text></g>"#,
        LEGEND_X + LEGEND_W + 4.0,
        TOP + 10.0,
        fmt_num(a1),
        LEGEND_X + LEGEND_W + 4.0,
        TOP + PLOT_H,
        fmt_num(a0),
        LEGEND_X + LEGEND_W / 2.0,
        TOP + PLOT_H + 20.0
    );
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(x2: f64, y2: f64, a: f64) -> SurfaceRow {
        SurfaceRow {
            x2,
            y2,
            min_area: a,
            x1: 0.0,
            y1: 0.0,
            alpha: 0.0,
            x2_arg: x2,
            y2_arg: y2,
            beta: 0.0,
        }
    }

    #[test]
    fn color_endpoints() {
        assert_eq!(color(0.0), "#440154");
        assert_eq!(color(1.0), "#fde725");
        assert_eq!(color(0.5), "#21918c");
    }

    #[test]
    fn one_cell() {
        let svg = render_heatmap_svg(&[row(0.5, 0.1, 0.23)]).unwrap();
        assert_eq!(svg.matches(r#"class="cell""#).count(), 1);
        assert!(svg.contains("x₂") && svg.contains("y₂"));
        assert!(svg.contains(r#"class="legend""#));
    }

    #[test]
    fn gap_inference_and_determinism() {
        let rows: Vec<_> = (0..3)
            .flat_map(|i| (0..2).map(move |j| row(0.6 + 0.05 * i as f64, 0.1 * j as f64, 0.23 + 0.001 * (i + j) as f64)))
            .collect();
        assert!((min_gap(rows.iter().map(|r| r.x2)).unwrap() - 0.05).abs() < 1e-12);
        let a = render_heatmap_svg(&rows).unwrap();
        assert_eq!(a, render_heatmap_svg(&rows).unwrap());
        assert_eq!(a.matches(r#"class="cell""#).count(), 6);
        assert!(a.contains("#440154") && a.contains("#fde725"));
    }
}
