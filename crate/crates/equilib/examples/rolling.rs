//! Drop a hexagonal prism with an off-centre weight on every face and
//! follow it until it rests.

use equilib::dynamics::{rest_faces, roll_trace};
use equilib::geom_core::solids::prism;
use equilib::Vec3;

fn main() {
    let p = prism(6, 1.0, 0.4);
    let c = Vec3::new(0.6, 0.0, 0.2);
    for f in 0..p.num_faces() {
        let t = roll_trace(&p, &c, f).unwrap();
        println!(
            "face {f}: path {:?}, potentials {:.4?}, arc {:.4}",
            t.faces, t.potentials, t.arc_length
        );
    }
    println!("rest faces: {:?}", rest_faces(&p, &c).unwrap());
}
