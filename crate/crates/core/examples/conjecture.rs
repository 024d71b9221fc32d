//! Two-angle search: triangle hinged at (1, 0), square hung from its top vertex.

use wormbound::{conjecture_search, PivotParams};

fn main() {
    let r = conjecture_search(1e-3, 1e-7).unwrap();
    let p = PivotParams::fit(&r.best);
    println!("area   {:.17}", r.area);
    println!("psi    {:.9}  phi {:.9}", p.psi, p.phi);
    println!("best   {:?}", r.best.to_array());
    println!("{} evaluations over {} zoom levels", r.evaluations, r.stage_index);
}
