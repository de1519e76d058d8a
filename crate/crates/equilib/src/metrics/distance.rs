use crate::geom_core::{ConvexPolyhedron, Vec3};

fn segment_distance(x: &Vec3, a: &Vec3, b: &Vec3) -> (f64, Vec3) {
    let d = b - a;
    let t = ((x - a).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
    let q = a + d * t;
    ((x - q).norm(), q)
}

/// Distance and closest point from `x` to the polygon `face` of `p`.
fn face_distance(p: &ConvexPolyhedron, face: usize, x: &Vec3) -> (f64, Vec3) {
    let pl = p.plane(face);
    let q = pl.project(x);
    let f = &p.faces()[face];
    let vs = p.vertices();
    let mut inside = true;
    for i in 0..f.len() {
        let (a, b) = (vs[f[i]], vs[f[(i + 1) % f.len()]]);
        if (b - a).cross(&pl.normal).dot(&(q - a)) > 0.0 {
            inside = false;
            break;
        }
    }
    if inside {
        return (pl.signed_distance(x).abs(), q);
    }
    let mut best = (f64::INFINITY, q);
    for i in 0..f.len() {
        let r = segment_distance(x, &vs[f[i]], &vs[f[(i + 1) % f.len()]]);
        if r.0 < best.0 {
            best = r;
        }
    }
    best
}

/// Euclidean distance from `x` to the solid `p` (zero inside).
///
/// Starts from the most violated face plane and searches the faces within
/// two vertex rings of it. The candidate is accepted when its supporting
/// plane, perpendicular to `x − q`, has every vertex behind it; otherwise
/// all faces facing `x` are scanned.
pub fn distance_to_polytope(p: &ConvexPolyhedron, x: &Vec3) -> f64 {
    let mut worst = (usize::MAX, 0.0);
    for (i, pl) in p.planes().iter().enumerate() {
        let d = pl.signed_distance(x);
        if d > worst.1 {
            worst = (i, d);
        }
    }
    if worst.0 == usize::MAX {
        return 0.0;
    }
    let vs = p.vertices();
    let mut ring: Vec<usize> = p.faces()[worst.0].clone();
    for _ in 0..2 {
        let mut next = ring.clone();
        for &v in &ring {
            next.extend_from_slice(p.neighbors(v));
        }
        next.sort_unstable();
        next.dedup();
        ring = next;
    }
    let mut near: Vec<usize> = ring.iter().flat_map(|&v| p.vertex_faces(v).iter().copied()).collect();
    near.sort_unstable();
    near.dedup();
    near.retain(|&f| p.plane(f).signed_distance(x) > 0.0);
    let best = near.iter().map(|&f| face_distance(p, f, x)).min_by(|a, b| a.0.total_cmp(&b.0)).unwrap();
    let (d, q) = best;
    let u = (x - q) / d;
    let slack = 1e-12 * (1.0 + x.norm());
    if vs.iter().all(|v| u.dot(&(v - q)) <= slack) {
        return d;
    }
    (0..p.num_faces())
        .filter(|&f| p.plane(f).signed_distance(x) > 0.0)
        .map(|f| face_distance(p, f, x).0)
        .fold(f64::INFINITY, f64::min)
}
