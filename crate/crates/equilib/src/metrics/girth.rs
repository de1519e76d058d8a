use super::{nelder_mead_2d, tangent_basis};
use crate::geom_core::{ConvexPolyhedron, Vec3};
use rayon::prelude::*;

/// Lattice size for the girth sweep and the Hausdorff inner term.
pub const GIRTH_DIRECTIONS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Girth {
    pub value: f64,
    pub direction: Vec3,
}

/// `count` near-uniform unit vectors on the golden-angle spiral.
pub fn fibonacci_directions(count: usize) -> Vec<Vec3> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let a = golden * i as f64;
            Vec3::new(r * a.cos(), r * a.sin(), z)
        })
        .collect()
}

/// Perimeter of the shadow of `p` on the plane perpendicular to `u`.
///
/// Sums the projected lengths of silhouette edges, those between a face
/// turned towards `u` and one turned away. For a convex body these edges
/// project exactly onto the boundary of the shadow.
pub fn projection_perimeter(p: &ConvexPolyhedron, u: &Vec3) -> f64 {
    let u = u.normalize();
    let front: Vec<bool> = p.planes().iter().map(|pl| pl.normal.dot(&u) >= 0.0).collect();
    let vs = p.vertices();
    let mut total = 0.0;
    for e in p.edges() {
        if e.faces.len() == 2 && front[e.faces[0]] != front[e.faces[1]] {
            let d = vs[e.v[1]] - vs[e.v[0]];
            total += (d - u * d.dot(&u)).norm();
        }
    }
    total
}

/// Minimum projection perimeter and its direction.
///
/// Sweeps [`GIRTH_DIRECTIONS`] lattice directions, then polishes the three
/// best with Nelder–Mead in the tangent plane. The value never exceeds the
/// best sampled perimeter.
pub fn girth(p: &ConvexPolyhedron) -> Girth {
    let dirs = fibonacci_directions(GIRTH_DIRECTIONS);
    let mut sampled: Vec<(f64, usize)> =
        dirs.par_iter().enumerate().map(|(i, u)| (projection_perimeter(p, u), i)).collect();
    sampled.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut best = Girth { value: sampled[0].0, direction: dirs[sampled[0].1] };
    let step = 0.5 * (4.0 * std::f64::consts::PI / GIRTH_DIRECTIONS as f64).sqrt();
    for &(_, i) in sampled.iter().take(3) {
        let u0 = dirs[i];
        let (e1, e2) = tangent_basis(&u0);
        let at = |x: [f64; 2]| (u0 + e1 * x[0] + e2 * x[1]).normalize();
        let (x, v) = nelder_mead_2d(|x| projection_perimeter(p, &at(x)), [0.0, 0.0], step, 300);
        if v < best.value {
            best = Girth { value: v, direction: at(x) };
        }
    }
    // report the hemisphere with non-negative leading component
    let d = best.direction;
    let flip = d.z < 0.0 || (d.z == 0.0 && (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)));
    if flip {
        best.direction = -d;
    }
    best
}
