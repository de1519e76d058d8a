use super::ConstructError;
use crate::equilibria::{classify_equilibria, Feature};
use crate::geom_core::{clip, convex_hull, ConvexPolyhedron, HalfSpace, Vec3};

/// `conv(P ∪ {(1 + tau)·w})` with `w` the area centroid of `face`.
///
/// The apex must stay strictly beneath every other face plane, so the cone
/// only replaces `face` and leaves every other face intact.
pub fn cone_extension(p: &ConvexPolyhedron, face: usize, tau: f64) -> Result<ConvexPolyhedron, ConstructError> {
    if face >= p.num_faces() {
        return Err(ConstructError::InvalidParams(format!("face {face} out of range")));
    }
    if tau == 0.0 {
        return Ok(p.clone());
    }
    if tau < 0.0 {
        return Err(ConstructError::InvalidParams(format!("tau = {tau} is negative")));
    }
    let tol = p.tolerance();
    let w = p.face_centroid(face);
    let apex = w * (1.0 + tau);
    if p.plane(face).signed_distance(&apex) <= tol {
        // apex not outside the base: the origin is not behind the face
        return Err(ConstructError::ConvexityLoss);
    }
    for g in 0..p.num_faces() {
        if g != face && p.plane(g).signed_distance(&apex) >= -tol {
            return Err(ConstructError::ConvexityLoss);
        }
    }
    let mut pts = p.vertices().to_vec();
    pts.push(apex);
    Ok(convex_hull(&pts)?)
}

/// Whether clipping `p` by `h` leaves every equilibrium relative to `c`
/// away from the cut plane.
///
/// A feature lies in the cut plane when all of its vertices do: the cut
/// face itself, its edges and its corners. Degenerate candidates count.
pub fn truncation_safety(p: &ConvexPolyhedron, c: &Vec3, h: &HalfSpace) -> Result<bool, ConstructError> {
    let q = clip(p, h)?;
    let report = classify_equilibria(&q, c)?;
    let tol = q.tolerance();
    let on_plane: Vec<bool> = q.vertices().iter().map(|v| h.plane.signed_distance(v).abs() <= tol).collect();
    let in_plane = |f: Feature| match f {
        Feature::Face(i) => q.faces()[i].iter().all(|&v| on_plane[v]),
        Feature::Edge(i) => q.edges()[i].v.iter().all(|&v| on_plane[v]),
        Feature::Vertex(i) => on_plane[i],
    };
    Ok(!report.points.iter().any(|pt| in_plane(pt.feature)))
}
