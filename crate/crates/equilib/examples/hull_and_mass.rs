//! Hull a point cloud, read off its mass properties, then cut it.

use equilib::geom_core::{clip, convex_hull, mass_properties, validate};
use equilib::{HalfSpace, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cloud: Vec<Vec3> = (0..500).map(|_| Vec3::new(rng.gen(), rng.gen(), rng.gen()) * 2.0).collect();
    let p = convex_hull(&cloud).expect("cloud spans three dimensions");
    println!("hull of {} points: V={} E={} F={}", cloud.len(), p.num_vertices(), p.num_edges(), p.num_faces());
    assert!(validate(&p).is_empty());

    let m = mass_properties(&p);
    println!("volume {:.6}, centroid {:.6?}", m.volume, m.centroid.as_slice());

    // keep the half below a tilted plane through the centroid
    let n = Vec3::new(1.0, 1.0, 2.0).normalize();
    let cut = clip(&p, &HalfSpace::new(n, n.dot(&m.centroid))).unwrap();
    let mc = mass_properties(&cut);
    println!("after the cut: F={} volume {:.6} ({:.1}% kept)", cut.num_faces(), mc.volume, 100.0 * mc.volume / m.volume);
}
