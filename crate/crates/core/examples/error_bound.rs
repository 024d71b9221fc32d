//! Grid-error estimates and the disk-plus-point areas behind the K2 normalization.

use wormbound::{circle_point_hull_area, domain_d_perimeter, grid_error_bound, safe_center_radius};

fn main() {
    println!("perimeter of D: {:.7}", domain_d_perimeter());
    for (d1, d2) in [(0.01, 0.01), (0.005, 0.005), (0.001, 0.0001)] {
        let e = grid_error_bound(d1, d2).unwrap();
        println!(
            "d1 = {d1:<6} d2 = {d2:<6} delta = {:.6}  exact = {:.6}  linear = {:.6}",
            e.delta, e.exact_bound, e.linear_bound
        );
    }
    let r = 1.0 / 6.0;
    println!("disk r = 1/6, point at sqrt(1.4): {:.6}", circle_point_hull_area(1.4f64.sqrt(), r).unwrap());
    println!("distance where that hull reaches 0.23: {:.6}", safe_center_radius(r, 0.23).unwrap());
}
