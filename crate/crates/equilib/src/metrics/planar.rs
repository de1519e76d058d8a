use super::{tangent_basis, MetricsError};
use crate::construct::Vec2;
use crate::geom_core::{ConvexPolyhedron, Vec3};
use std::f64::consts::{PI, TAU};

fn cross(o: &Vec2, a: &Vec2, b: &Vec2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Counter-clockwise hull by the monotone chain; collinear points dropped.
pub fn convex_hull_2d(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Vec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn polygon_perimeter(poly: &[Vec2]) -> f64 {
    (0..poly.len()).map(|i| (poly[(i + 1) % poly.len()] - poly[i]).norm()).sum()
}

/// Shadow of `p` on the plane perpendicular to `u`, as a CCW polygon in an
/// orthonormal basis of that plane.
pub fn projection_polygon(p: &ConvexPolyhedron, u: &Vec3) -> Vec<Vec2> {
    let (e1, e2) = tangent_basis(&u.normalize());
    let pts: Vec<Vec2> = p.vertices().iter().map(|v| Vec2::new(v.dot(&e1), v.dot(&e2))).collect();
    convex_hull_2d(&pts)
}

/// Mean width of a convex polygon, `(1/π)∫₀^{2π} h(θ) dθ`, integrating the
/// support function exactly over each vertex's normal cone: on the arc
/// `[a, b]` owned by vertex `v`, `∫ v·(cos θ, sin θ) dθ = [v.x sin θ −
/// v.y cos θ]_a^b`.
///
/// The input is hulled first, so any point set with a 2D hull works.
pub fn mean_width_2d(polygon: &[Vec2]) -> Result<f64, MetricsError> {
    let hull = convex_hull_2d(polygon);
    if hull.len() < 3 {
        return Err(MetricsError::DegeneratePolygon);
    }
    let scale = hull.iter().map(|v| (v - hull[0]).norm()).fold(0.0, f64::max);
    let area: f64 = (1..hull.len() - 1).map(|i| cross(&hull[0], &hull[i], &hull[i + 1])).sum::<f64>() / 2.0;
    if !(area > 1e-12 * scale * scale) {
        return Err(MetricsError::DegeneratePolygon);
    }
    let k = hull.len();
    let normal_angle = |i: usize| {
        let e = hull[(i + 1) % k] - hull[i];
        e.y.atan2(e.x) - PI / 2.0
    };
    let mut total = 0.0;
    for i in 0..k {
        let a = normal_angle((i + k - 1) % k);
        let b = a + (normal_angle(i) - a).rem_euclid(TAU);
        let v = hull[i];
        total += (v.x * b.sin() - v.y * b.cos()) - (v.x * a.sin() - v.y * a.cos());
    }
    Ok(total / PI)
}
