//! Certifies the angle lower bound over K1 with both methods.

use wormbound::bounds::{bound_breakdown, THEOREM_TARGET};
use wormbound::{certify_theorem, CertifyMethod};

fn main() {
    let b = bound_breakdown(74.84f64.to_radians(), 95.48f64.to_radians()).unwrap();
    println!("near the minimum of p: {b:?}");

    let bnb = certify_theorem(THEOREM_TARGET, CertifyMethod::BranchAndBound, 1e-10).unwrap();
    println!("{}", serde_json::to_string_pretty(&bnb).unwrap());

    let grid = certify_theorem(0.2274, CertifyMethod::FullGrid, 2e-4).unwrap();
    println!("{}", serde_json::to_string_pretty(&grid).unwrap());
}
