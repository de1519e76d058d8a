use super::{ConvexPolyhedron, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProperties {
    pub volume: f64,
    pub first_moment: Vec3,
    pub centroid: Vec3,
}

/// Volume, first moment and centroid of a homogeneous solid.
///
/// Each face is fanned from its first vertex and every fan triangle is
/// coned to the vertex average, which keeps cancellation bounded wherever
/// the body sits.
pub fn mass_properties(p: &ConvexPolyhedron) -> MassProperties {
    let anchor = p.vertex_average();
    let vs = p.vertices();
    let mut volume = 0.0;
    // moment about the anchor, shifted back at the end
    let mut moment = Vec3::zeros();
    for f in p.faces() {
        let o = vs[f[0]] - anchor;
        for i in 1..f.len() - 1 {
            let a = vs[f[i]] - anchor;
            let b = vs[f[i + 1]] - anchor;
            let v = o.dot(&a.cross(&b)) / 6.0;
            volume += v;
            moment += (o + a + b) * (v / 4.0);
        }
    }
    let centroid = anchor + moment / volume;
    MassProperties { volume, first_moment: centroid * volume, centroid }
}
