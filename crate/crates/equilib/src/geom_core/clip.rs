use super::hull::hull_triangles;
use super::normalize::normalize_faces;
use super::{ConvexPolyhedron, GeomError, HalfSpace, Vec3};

/// `P ∩ h`. Returns a clone when the plane misses `P`.
///
/// The kept vertices keep their exact coordinates; new vertices are edge
/// crossings. The result is re-hulled so the cut face comes out merged.
pub fn clip(p: &ConvexPolyhedron, h: &HalfSpace) -> Result<ConvexPolyhedron, GeomError> {
    let tol = p.tolerance();
    let s: Vec<f64> = p.vertices().iter().map(|v| h.plane.signed_distance(v)).collect();
    if s.iter().all(|&d| d <= tol) {
        return Ok(p.clone());
    }
    if s.iter().all(|&d| d >= -tol) {
        return Err(GeomError::EmptyResult);
    }
    let vs = p.vertices();
    let mut pts: Vec<Vec3> = (0..vs.len()).filter(|&i| s[i] <= tol).map(|i| vs[i]).collect();
    for e in p.edges() {
        let (a, b) = (e.v[0], e.v[1]);
        if (s[a] < -tol && s[b] > tol) || (s[a] > tol && s[b] < -tol) {
            let t = s[a] / (s[a] - s[b]);
            pts.push(vs[a] + (vs[b] - vs[a]) * t);
        }
    }
    let tris = hull_triangles(&pts).map_err(|_| GeomError::EmptyResult)?;
    Ok(normalize_faces(pts, tris))
}
