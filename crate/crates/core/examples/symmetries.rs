//! The three isometries fixing the unit segment leave the hull area unchanged.

use wormbound::{apply_symmetry, mu, Config, SymmetryKind};

fn main() {
    let c = Config::try_new(0.6605, 0.1878, 1.3077, 0.741, 0.1274, 1.6373).unwrap();
    println!("{:<13} {:?}  area {:.15}", "identity", c.to_array(), mu(&c));
    for s in SymmetryKind::ALL {
        let d = apply_symmetry(&c, s);
        println!("{:<13} {:?}  area {:.15}", format!("{s:?}"), d.to_array(), mu(&d));
    }
}
