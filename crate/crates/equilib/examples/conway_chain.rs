//! Obtuse chains spiralling inward, and the radial profile built from them.

use equilib::construct::{conway_chain, monotone_profile, ChainSpec};
use std::f64::consts::PI;

fn main() {
    let spec = ChainSpec { beta: PI / 2.0, target_radius: 0.5, k: 8 };
    println!("reach for beta = pi/2, k = 8: {:.6}", spec.reach());
    let pts = conway_chain(&spec).unwrap();
    for (i, q) in pts.iter().enumerate() {
        println!("  q{i}: r = {:.6}, angle = {:.6}", q.norm(), q.y.atan2(q.x));
    }

    let too_far = ChainSpec { target_radius: spec.reach(), ..spec };
    println!("target at the reach itself: {}", conway_chain(&too_far).unwrap_err());

    for k in [2, 16, 64] {
        match monotone_profile(0.25, k) {
            Ok(profile) => println!("profile eps 0.25, k = {k}: {} points", profile.len()),
            Err(e) => println!("profile eps 0.25, k = {k}: {e}"),
        }
    }
}
