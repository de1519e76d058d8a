//! Diameter, girth, mean width, Hausdorff distance to the unit ball and
//! rotational symmetry residual.

mod distance;
mod girth;
mod hausdorff;
mod planar;
mod symmetry;

pub use distance::distance_to_polytope;
pub use girth::{fibonacci_directions, girth, projection_perimeter, Girth, GIRTH_DIRECTIONS};
pub use hausdorff::{hausdorff_to_ball, lattice_covering_radius, HausdorffEstimate};
pub use planar::{convex_hull_2d, mean_width_2d, polygon_perimeter, projection_polygon};
pub use symmetry::nfold_symmetry_residual;

use crate::geom_core::{ConvexPolyhedron, Vec3};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("polygon is degenerate (fewer than three extreme points or no area)")]
    DegeneratePolygon,
    #[error("origin is not interior to the polyhedron")]
    OriginNotInterior,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub diameter: f64,
    pub girth: f64,
    pub ratio: f64,
    /// `None` when the origin is not interior, so the ball is not a
    /// meaningful comparison.
    pub hausdorff_to_ball: Option<f64>,
    /// Certified sampling allowance: the true distance is at most
    /// `hausdorff_to_ball + hausdorff_error_bound`.
    pub hausdorff_error_bound: Option<f64>,
    pub girth_direction: Vec3,
    pub symmetry_order: usize,
    pub symmetry_axis: Vec3,
    pub symmetry_residual: f64,
}

/// Largest distance between two vertices.
pub fn diameter(p: &ConvexPolyhedron) -> f64 {
    let vs = p.vertices();
    (0..vs.len())
        .into_par_iter()
        .map(|i| vs[i + 1..].iter().map(|w| (vs[i] - w).norm_squared()).fold(0.0, f64::max))
        .reduce(|| 0.0, f64::max)
        .sqrt()
}

/// Everything in [`MetricsReport`], with the symmetry residual taken for
/// order `n` about `axis`.
pub fn metrics_report(p: &ConvexPolyhedron, n: usize, axis: &Vec3) -> MetricsReport {
    let d = diameter(p);
    let g = girth(p);
    let h = hausdorff_to_ball(p).ok();
    MetricsReport {
        diameter: d,
        girth: g.value,
        ratio: d / g.value,
        hausdorff_to_ball: h.map(|h| h.value),
        hausdorff_error_bound: h.map(|h| h.error_bound),
        girth_direction: g.direction,
        symmetry_order: n,
        symmetry_axis: axis.normalize(),
        symmetry_residual: nfold_symmetry_residual(p, n, axis),
    }
}

/// Orthonormal pair spanning the plane perpendicular to unit `u`.
pub(crate) fn tangent_basis(u: &Vec3) -> (Vec3, Vec3) {
    let helper = if u.x.abs() < 0.6 { Vec3::x() } else { Vec3::y() };
    let e1 = u.cross(&helper).normalize();
    let e2 = u.cross(&e1);
    (e1, e2)
}

/// Nelder–Mead minimisation in two variables. Returns the best point and
/// value.
pub(crate) fn nelder_mead_2d(f: impl Fn([f64; 2]) -> f64, start: [f64; 2], step: f64, iters: usize) -> ([f64; 2], f64) {
    let mut s = [start, [start[0] + step, start[1]], [start[0], start[1] + step]];
    let mut v = [f(s[0]), f(s[1]), f(s[2])];
    for _ in 0..iters {
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let (b, m, w) = (idx[0], idx[1], idx[2]);
        let span = (v[w] - v[b]).abs();
        let size = ((s[w][0] - s[b][0]).abs() + (s[w][1] - s[b][1]).abs()).max((s[m][0] - s[b][0]).abs() + (s[m][1] - s[b][1]).abs());
        if span <= 1e-15 * v[b].abs().max(1e-300) && size < 1e-12 {
            break;
        }
        if size < 1e-14 {
            break;
        }
        let cen = [(s[b][0] + s[m][0]) / 2.0, (s[b][1] + s[m][1]) / 2.0];
        let at = |t: f64| [cen[0] + t * (s[w][0] - cen[0]), cen[1] + t * (s[w][1] - cen[1])];
        let r = at(-1.0);
        let fr = f(r);
        if fr < v[b] {
            let e = at(-2.0);
            let fe = f(e);
            if fe < fr {
                s[w] = e;
                v[w] = fe;
            } else {
                s[w] = r;
                v[w] = fr;
            }
        } else if fr < v[m] {
            s[w] = r;
            v[w] = fr;
        } else {
            let c = if fr < v[w] { at(-0.5) } else { at(0.5) };
            let fc = f(c);
            if fc < v[w].min(fr) {
                s[w] = c;
                v[w] = fc;
            } else {
                for i in [m, w] {
                    s[i] = [(s[i][0] + s[b][0]) / 2.0, (s[i][1] + s[b][1]) / 2.0];
                    v[i] = f(s[i]);
                }
            }
        }
    }
    let mut bi = 0;
    for i in 1..3 {
        if v[i] < v[bi] {
            bi = i;
        }
    }
    (s[bi], v[bi])
}
