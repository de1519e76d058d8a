//! Diameter, girth and their ratio for a few bodies; the ratio never drops
//! below 1/pi.

use equilib::geom_core::solids::{icosphere, platonic, prism};
use equilib::metrics::{girth, metrics_report};
use equilib::Vec3;
use std::f64::consts::PI;

fn main() {
    let mut bodies: Vec<(String, _)> = platonic().into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    bodies.push(("icosphere 3".into(), icosphere(3)));
    bodies.push(("needle prism".into(), prism(8, 0.1, 3.0)));
    println!("1/pi = {:.6}", 1.0 / PI);
    for (name, p) in &bodies {
        let m = metrics_report(p, 1, &Vec3::z());
        let g = girth(p);
        println!(
            "{name:<14} diameter {:.5} girth {:.5} ratio {:.5} hausdorff {:?} (girth along {:.3?})",
            m.diameter,
            m.girth,
            m.ratio,
            m.hausdorff_to_ball.map(|h| (h * 1e4).round() / 1e4),
            g.direction.as_slice()
        );
    }
}
