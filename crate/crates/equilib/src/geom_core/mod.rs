//! Convex polyhedron representation, hull construction, half-space
//! clipping and mass properties.
//!
//! All predicates share one relative tolerance, [`EPS_GEOM`], scaled by the
//! circumradius of the body under test.

mod clip;
mod hull;
mod mass;
mod normalize;
pub mod solids;
mod validate;

pub use clip::clip;
pub use hull::convex_hull;
pub use mass::{mass_properties, MassProperties};
pub use normalize::normalize_faces;
pub use validate::{validate, Violation};

use thiserror::Error;

pub type Vec3 = nalgebra::Vector3<f64>;

/// Relative tolerance for coplanarity and containment, multiplied by the
/// circumradius.
pub const EPS_GEOM: f64 = 1e-9;

/// Face normals closer than this angle (radians) are candidates for merging.
pub const MERGE_ANGLE: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("input points are coplanar or collinear within tolerance")]
    DegenerateInput,
    #[error("clipped body has empty interior")]
    EmptyResult,
    #[error("polyhedron violates invariants: {0:?}")]
    Invalid(Vec<Violation>),
}

/// Plane `{x : normal·x = offset}` with unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub normal: Vec3,
    pub offset: f64,
}

impl Plane {
    /// Normalizes `normal` and rescales the offset to match.
    pub fn new(normal: Vec3, offset: f64) -> Self {
        let len = normal.norm();
        Plane { normal: normal / len, offset: offset / len }
    }

    pub fn through(normal: Vec3, point: &Vec3) -> Self {
        let n = normal.normalize();
        Plane { normal: n, offset: n.dot(point) }
    }

    pub fn signed_distance(&self, p: &Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn project(&self, p: &Vec3) -> Vec3 {
        p - self.normal * self.signed_distance(p)
    }
}

/// Closed half-space `normal·x ≤ offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSpace {
    pub plane: Plane,
}

impl HalfSpace {
    pub fn new(normal: Vec3, offset: f64) -> Self {
        HalfSpace { plane: Plane::new(normal, offset) }
    }

    pub fn complement(&self) -> Self {
        HalfSpace { plane: Plane { normal: -self.plane.normal, offset: -self.plane.offset } }
    }

    pub fn contains(&self, p: &Vec3, tol: f64) -> bool {
        self.plane.signed_distance(p) <= tol
    }
}

/// An edge `v[0]–v[1]` with `v[0] < v[1]`. `faces[0]` traverses it as
/// `v[0] → v[1]`; a valid polyhedron has exactly two incident faces.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub v: [usize; 2],
    pub faces: Vec<usize>,
}

/// Convex polyhedron: vertices, outward counter-clockwise face cycles and
/// derived adjacency.
///
/// Construction through [`convex_hull`], [`clip`] or [`normalize_faces`]
/// guarantees the invariants. [`ConvexPolyhedron::from_raw`] computes the
/// derived data for arbitrary input and leaves checking to [`validate`].
#[derive(Debug, Clone)]
pub struct ConvexPolyhedron {
    vertices: Vec<Vec3>,
    faces: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    planes: Vec<Plane>,
    // face_edges[f][i] joins faces[f][i] and faces[f][i+1]
    face_edges: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
    vertex_faces: Vec<Vec<usize>>,
}

impl ConvexPolyhedron {
    /// Builds derived data without checking anything.
    pub fn from_raw(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Self {
        let planes = faces.iter().map(|f| newell_plane(&vertices, f)).collect();
        let mut index: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut face_edges = Vec::with_capacity(faces.len());
        for (fi, f) in faces.iter().enumerate() {
            let mut fe = Vec::with_capacity(f.len());
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                let key = (a.min(b), a.max(b));
                let id = *index.entry(key).or_insert_with(|| {
                    edges.push(Edge { v: [key.0, key.1], faces: Vec::new() });
                    edges.len() - 1
                });
                // keep faces[0] as the one running v0 -> v1
                if a < b {
                    edges[id].faces.insert(0, fi);
                } else {
                    edges[id].faces.push(fi);
                }
                fe.push(id);
            }
            face_edges.push(fe);
        }
        let mut neighbors = vec![Vec::new(); vertices.len()];
        for e in &edges {
            neighbors[e.v[0]].push(e.v[1]);
            neighbors[e.v[1]].push(e.v[0]);
        }
        for n in &mut neighbors {
            n.sort_unstable();
            n.dedup();
        }
        let mut vertex_faces = vec![Vec::new(); vertices.len()];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                if v < vertices.len() {
                    vertex_faces[v].push(fi);
                }
            }
        }
        ConvexPolyhedron { vertices, faces, edges, planes, face_edges, neighbors, vertex_faces }
    }

    /// Builds from oriented faces and rejects anything `validate` objects to.
    pub fn from_faces(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let p = Self::from_raw(vertices, faces);
        let v = validate(&p);
        if v.is_empty() {
            Ok(p)
        } else {
            Err(GeomError::Invalid(v))
        }
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn plane(&self, face: usize) -> &Plane {
        &self.planes[face]
    }
    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }
    /// Edge ids around `face`, aligned with its vertex cycle.
    pub fn face_edges(&self, face: usize) -> &[usize] {
        &self.face_edges[face]
    }
    /// Sorted ids of vertices joined to `v` by an edge.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }
    /// Faces containing `v`, in increasing id order.
    pub fn vertex_faces(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Face across `edge` from `face`.
    pub fn across(&self, face: usize, edge: usize) -> Option<usize> {
        self.edges[edge].faces.iter().copied().find(|&g| g != face)
    }

    pub fn vertex_average(&self) -> Vec3 {
        let s: Vec3 = self.vertices.iter().sum();
        s / self.vertices.len() as f64
    }

    /// Largest distance from `center` to a vertex.
    pub fn radius_about(&self, center: &Vec3) -> f64 {
        self.vertices.iter().map(|v| (v - center).norm()).fold(0.0, f64::max)
    }

    /// Absolute tolerance: `EPS_GEOM` times the radius about the vertex average.
    pub fn tolerance(&self) -> f64 {
        EPS_GEOM * self.radius_about(&self.vertex_average()).max(f64::MIN_POSITIVE)
    }

    /// Area-weighted centroid of a face polygon.
    pub fn face_centroid(&self, face: usize) -> Vec3 {
        let f = &self.faces[face];
        let n = self.planes[face].normal;
        let o = self.vertices[f[0]];
        let mut area = 0.0;
        let mut acc = Vec3::zeros();
        for i in 1..f.len() - 1 {
            let (a, b) = (self.vertices[f[i]], self.vertices[f[i + 1]]);
            let w = (a - o).cross(&(b - o)).dot(&n) * 0.5;
            area += w;
            acc += (o + a + b) * (w / 3.0);
        }
        if area.abs() > 0.0 {
            acc / area
        } else {
            o
        }
    }

    pub fn face_area(&self, face: usize) -> f64 {
        let f = &self.faces[face];
        let mut s = Vec3::zeros();
        for i in 0..f.len() {
            s += self.vertices[f[i]].cross(&self.vertices[f[(i + 1) % f.len()]]);
        }
        0.5 * s.dot(&self.planes[face].normal)
    }

    /// Applies `map` to every vertex while keeping combinatorics.
    /// Only meaningful for maps that preserve convexity and orientation.
    pub fn map_vertices(&self, map: impl Fn(&Vec3) -> Vec3) -> Self {
        Self::from_raw(self.vertices.iter().map(map).collect(), self.faces.clone())
    }

    pub fn translated(&self, t: &Vec3) -> Self {
        self.map_vertices(|v| v + t)
    }

    pub fn scaled(&self, s: f64) -> Self {
        self.map_vertices(|v| v * s)
    }
}

/// Newell normal and mean offset of a vertex cycle.
pub(crate) fn newell_plane(vertices: &[Vec3], face: &[usize]) -> Plane {
    if face.len() < 3 {
        return Plane { normal: Vec3::zeros(), offset: 0.0 };
    }
    let o = vertices[face[0]];
    let mut n = Vec3::zeros();
    let mut centre = Vec3::zeros();
    for i in 0..face.len() {
        let a = vertices[face[i]] - o;
        let b = vertices[face[(i + 1) % face.len()]] - o;
        n += a.cross(&b);
        centre += a;
    }
    let len = n.norm();
    if len == 0.0 {
        return Plane { normal: Vec3::zeros(), offset: 0.0 };
    }
    let n = n / len;
    centre = centre / face.len() as f64 + o;
    Plane { normal: n, offset: n.dot(&centre) }
}
