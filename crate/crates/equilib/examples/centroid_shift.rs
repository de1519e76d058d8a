//! How far the centroid moves when a thin cap is sliced off, against the
//! bound `v_cut * R / (V - v_cut)`.

use equilib::equilibria::centroid_shift;
use equilib::geom_core::solids::icosphere;
use equilib::{HalfSpace, Vec3};

fn main() {
    let p = icosphere(3);
    let n = Vec3::new(0.2, 0.3, 1.0).normalize();
    println!("{:>10} {:>14} {:>14} {:>8}", "depth", "shift", "bound", "ratio");
    // deeper than the gap to the nearest face plane, so every cut bites
    for k in 0..7 {
        let depth = 0.3 * 0.5f64.powi(k);
        let (shift, bound) = centroid_shift(&p, &HalfSpace::new(n, 1.0 - depth)).unwrap();
        println!("{depth:>10.2e} {shift:>14.6e} {bound:>14.6e} {:>8.4}", shift / bound);
    }
}
