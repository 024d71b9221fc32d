//! Hull area of a configuration and the vertices of its hull.
//!
//!     cargo run --example hull_area -- 0.6605 0.1878 1.3077 0.741 0.1274 1.6373

use wormbound::{config_points, convex_hull, in_k1, in_k2, mu, Config};

fn main() {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let c = if args.is_empty() {
        Config::try_new(0.6605, 0.1878, 1.3077, 0.741, 0.1274, 1.6373)
    } else {
        Config::try_from_slice(&args)
    }
    .expect("six finite parameters");

    let hull = convex_hull(&config_points(&c)).expect("nine finite points");
    println!("config   {:?}", c.to_array());
    println!("area     {:.10}", mu(&c));
    println!("in K1    {}", in_k1(&c));
    println!("in K2    {}", in_k2(&c));
    for p in hull.vertices() {
        println!("  ({:+.6}, {:+.6})", p.x, p.y);
    }
}
