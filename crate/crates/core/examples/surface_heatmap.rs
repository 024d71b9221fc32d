//! Per-(x2, y2) minimum surface on a small window, saved as CSV and SVG.
//!
//!     cargo run --example surface_heatmap -- out_dir

use std::path::PathBuf;

use wormbound::configuration::k1_alpha;
use wormbound::io::{heatmap_file, write_surface_csv_file};
use wormbound::{surface_min, DomainBox, Interval};

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let bbox = DomainBox {
        x1: Interval::new(0.64, 0.7),
        y1: Interval::new(0.17, 0.21),
        alpha: k1_alpha(),
        x2: Interval::new(0.7, 0.78),
        y2: Interval::new(0.1, 0.16),
        beta: Interval::new(1.55, 1.67),
    };
    let surface = surface_min(bbox, (8, 6), 0.01, 0.01).unwrap();
    let (i, j, best) = surface.global_min().expect("a non-empty cell");
    println!("best cell ({i}, {j}) center {:?}: {:.8}", surface.cell_center(i, j), best.min_area);

    let csv = dir.join("surface.csv");
    let svg = dir.join("surface.svg");
    write_surface_csv_file(&surface, &csv).unwrap();
    let n = heatmap_file(&csv, &svg).unwrap();
    println!("{n} cells -> {} and {}", csv.display(), svg.display());
}
