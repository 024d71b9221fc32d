//! A two-stage grid search plan around the minimizing cluster.
//!
//! Pass a plan file to run it instead: `cargo run --example plan_search -- plan.json`.

use wormbound::bounds::grid_error_bound;
use wormbound::configuration::{k1_alpha, k1_beta};
use wormbound::search::StageSpec;
use wormbound::{run_plan, DomainBox, Interval, SearchPlan, Stage};

fn main() {
    let plan = match std::env::args().nth(1) {
        Some(path) => SearchPlan::from_json(&std::fs::read_to_string(path).expect("readable plan")).expect("valid plan"),
        None => {
            let bbox = DomainBox {
                x1: Interval::new(0.6, 0.72),
                y1: Interval::new(0.14, 0.235),
                alpha: k1_alpha(),
                x2: Interval::new(0.7, 0.77),
                y2: Interval::new(0.1, 0.17),
                beta: k1_beta(),
            };
            SearchPlan {
                stages: vec![StageSpec::Explicit(Stage::new(bbox, 0.005, 0.005)), StageSpec::auto(0.002, 0.002)],
            }
        }
    };
    println!("{}", plan.to_json());
    let r = run_plan(&plan).expect("plan runs");
    let (d1, d2) = plan.stages.last().unwrap().steps();
    println!("best     {:?}", r.best.to_array());
    println!("area     {:.10}", r.area);
    println!("error    {:.6}", grid_error_bound(d1, d2).unwrap().exact_bound);
    println!("nodes    {} evaluated, {} pruned", r.evaluations, r.pruned);
}
