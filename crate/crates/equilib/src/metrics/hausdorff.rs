use super::girth::{fibonacci_directions, GIRTH_DIRECTIONS};
use super::{distance_to_polytope, nelder_mead_2d, tangent_basis, MetricsError};
use crate::geom_core::{convex_hull, ConvexPolyhedron};
use rayon::prelude::*;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HausdorffEstimate {
    /// `max(outer, inner)`.
    pub value: f64,
    /// Largest vertex excess `|v| − 1`, exact.
    pub outer: f64,
    /// Largest distance from a unit direction to the body, sampled.
    pub inner: f64,
    /// Certified slack: the true inner term lies in
    /// `[inner, inner + error_bound]`.
    pub error_bound: f64,
}

/// Angular covering radius of the `count`-point Fibonacci lattice: the
/// largest circumradius over its spherical Delaunay triangles, read off the
/// convex hull of the lattice (a face at distance `h` from the centre has
/// circumcircle of angular radius `acos h`).
pub fn lattice_covering_radius(count: usize) -> f64 {
    let dirs = fibonacci_directions(count);
    let hull = convex_hull(&dirs).expect("lattice spans the sphere");
    hull.planes().iter().map(|pl| pl.offset.clamp(-1.0, 1.0).acos()).fold(0.0, f64::max)
}

fn default_cover() -> f64 {
    static COVER: OnceLock<f64> = OnceLock::new();
    *COVER.get_or_init(|| lattice_covering_radius(GIRTH_DIRECTIONS))
}

/// Hausdorff distance between `p` and the unit ball about the origin.
pub fn hausdorff_to_ball(p: &ConvexPolyhedron) -> Result<HausdorffEstimate, MetricsError> {
    let tol = p.tolerance();
    if p.planes().iter().any(|pl| pl.offset <= tol) {
        return Err(MetricsError::OriginNotInterior);
    }
    let outer = p.vertices().iter().map(|v| v.norm() - 1.0).fold(0.0, f64::max);
    let dirs = fibonacci_directions(GIRTH_DIRECTIONS);
    let mut sampled: Vec<(f64, usize)> =
        dirs.par_iter().enumerate().map(|(i, u)| (distance_to_polytope(p, u), i)).collect();
    sampled.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut inner = sampled[0].0;
    if inner > 0.0 {
        let step = 0.5 * (4.0 * std::f64::consts::PI / GIRTH_DIRECTIONS as f64).sqrt();
        for &(_, i) in sampled.iter().take(3) {
            let u0 = dirs[i];
            let (e1, e2) = tangent_basis(&u0);
            let at = |x: [f64; 2]| (u0 + e1 * x[0] + e2 * x[1]).normalize();
            let (_, v) = nelder_mead_2d(|x| -distance_to_polytope(p, &at(x)), [0.0, 0.0], step, 200);
            inner = inner.max(-v);
        }
    }
    // Two upper bounds on the true inner term. Distance to a convex set is
    // 1-Lipschitz, so the lattice chord bounds the sampling gap. Also the
    // point rho(u)*u on the boundary gives dist(u, P) <= 1 - rho(u), and
    // rho is never below the smallest face offset; that bound is attained
    // at the normal of the nearest face, so it is sharp.
    let cover = default_cover();
    let lipschitz = 2.0 * (cover / 2.0).sin();
    let min_offset = p.planes().iter().map(|pl| pl.offset).fold(f64::INFINITY, f64::min);
    let radial = ((1.0 - min_offset).max(0.0) - inner).max(0.0);
    let error_bound = lipschitz.min(radial);
    Ok(HausdorffEstimate { value: outer.max(inner), outer, inner, error_bound })
}
