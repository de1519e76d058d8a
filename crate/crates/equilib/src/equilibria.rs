//! Equilibrium points of a convex polyhedron relative to a reference point.
//!
//! A boundary point `q` is an equilibrium when the plane through `q`
//! perpendicular to `q − c` supports the body. The contact feature's
//! dimension gives the class: face → stable, edge → saddle, vertex →
//! unstable. Features that sit within tolerance of the boundary between
//! "equilibrium" and "not" are listed as degenerate and left out of the
//! counts.

use crate::geom_core::{mass_properties, ConvexPolyhedron, HalfSpace, Vec3, EPS_GEOM};
use crate::geom_core::{clip, GeomError};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EquilibriaError {
    #[error("reference point is not strictly inside the polyhedron")]
    ReferenceNotInterior,
    #[error("report carries degenerate equilibria")]
    DegenerateReport,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Feature {
    Face(usize),
    Edge(usize),
    Vertex(usize),
}

impl Feature {
    pub fn id(&self) -> usize {
        match *self {
            Feature::Face(i) | Feature::Edge(i) | Feature::Vertex(i) => i,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EqClass {
    Stable,
    Saddle,
    Unstable,
}

impl EqClass {
    pub fn name(&self) -> &'static str {
        match self {
            EqClass::Stable => "stable",
            EqClass::Saddle => "saddle",
            EqClass::Unstable => "unstable",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumPoint {
    pub location: Vec3,
    pub feature: Feature,
    pub class: EqClass,
    pub degenerate: bool,
    /// Distance from `location` to the relative boundary of the feature, or
    /// the support gap, whichever is smaller. Negative values are
    /// borderline misses kept because they fall inside the tolerance.
    pub clearance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub s: usize,
    pub h: usize,
    pub u: usize,
    pub points: Vec<EquilibriumPoint>,
    pub any_degenerate: bool,
    pub euler_residual: i64,
}

impl EquilibriumReport {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.s, self.h, self.u)
    }

    /// Faces carrying a counted stable equilibrium.
    pub fn stable_faces(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| p.class == EqClass::Stable && !p.degenerate)
            .map(|p| p.feature.id())
            .collect()
    }

    /// Smallest clearance over counted equilibria.
    pub fn min_clearance(&self) -> f64 {
        self.points.iter().filter(|p| !p.degenerate).map(|p| p.clearance).fold(f64::INFINITY, f64::min)
    }

    fn from_points(mut points: Vec<EquilibriumPoint>) -> Self {
        points.sort_by(|a, b| (a.class, a.feature.id()).cmp(&(b.class, b.feature.id())));
        let count = |c: EqClass| points.iter().filter(|p| p.class == c && !p.degenerate).count();
        let (s, h, u) = (count(EqClass::Stable), count(EqClass::Saddle), count(EqClass::Unstable));
        let any_degenerate = points.iter().any(|p| p.degenerate);
        EquilibriumReport { s, h, u, points, any_degenerate, euler_residual: s as i64 - h as i64 + u as i64 - 2 }
    }
}

/// Classifies every face, edge and vertex of `p` relative to `c`.
pub fn classify_equilibria(p: &ConvexPolyhedron, c: &Vec3) -> Result<EquilibriumReport, EquilibriaError> {
    let tol = EPS_GEOM * p.radius_about(c);
    if !is_interior(p, c, tol) {
        return Err(EquilibriaError::ReferenceNotInterior);
    }
    let faces: Vec<EquilibriumPoint> =
        (0..p.num_faces()).into_par_iter().filter_map(|f| face_test(p, c, f, tol)).collect();
    let edges: Vec<EquilibriumPoint> =
        (0..p.num_edges()).into_par_iter().filter_map(|e| edge_test(p, c, e, tol)).collect();
    let verts: Vec<EquilibriumPoint> =
        (0..p.num_vertices()).into_par_iter().filter_map(|v| vertex_test(p, c, v, tol)).collect();
    let mut points = faces;
    points.extend(edges);
    points.extend(verts);
    Ok(EquilibriumReport::from_points(points))
}

pub(crate) fn is_interior(p: &ConvexPolyhedron, c: &Vec3, tol: f64) -> bool {
    p.planes().iter().all(|pl| -pl.signed_distance(c) > tol)
}

/// Signed distances from the in-plane foot `q` to each edge line of `face`,
/// positive outside. Ordered as the face's edge cycle.
pub(crate) fn edge_violations(p: &ConvexPolyhedron, face: usize, q: &Vec3) -> Vec<f64> {
    let f = &p.faces()[face];
    let n = p.plane(face).normal;
    let vs = p.vertices();
    (0..f.len())
        .map(|i| {
            let a = vs[f[i]];
            let b = vs[f[(i + 1) % f.len()]];
            let m = (b - a).cross(&n).normalize();
            m.dot(&(q - a))
        })
        .collect()
}

fn face_test(p: &ConvexPolyhedron, c: &Vec3, face: usize, tol: f64) -> Option<EquilibriumPoint> {
    let q = p.plane(face).project(c);
    let worst = edge_violations(p, face, &q).into_iter().fold(f64::NEG_INFINITY, f64::max);
    let clearance = -worst;
    if clearance < -tol {
        return None;
    }
    Some(EquilibriumPoint {
        location: q,
        feature: Feature::Face(face),
        class: EqClass::Stable,
        degenerate: clearance <= tol,
        clearance,
    })
}

fn edge_test(p: &ConvexPolyhedron, c: &Vec3, edge: usize, tol: f64) -> Option<EquilibriumPoint> {
    let e = &p.edges()[edge];
    let vs = p.vertices();
    let (a, b) = (vs[e.v[0]], vs[e.v[1]]);
    let d = b - a;
    let len = d.norm();
    let t = (c - a).dot(&d) / (len * len);
    let q = a + d * t;
    let end_gap = (t * len).min((1.0 - t) * len);
    if end_gap < -tol {
        return None;
    }
    let u = (q - c).normalize();
    // support condition on every vertex of the incident faces; by convexity
    // the plane supports the body iff it supports this neighbourhood
    let mut gap = f64::INFINITY;
    for &f in &e.faces {
        for &v in &p.faces()[f] {
            if v == e.v[0] || v == e.v[1] {
                continue;
            }
            gap = gap.min(-u.dot(&(vs[v] - q)));
        }
    }
    if gap < -tol {
        return None;
    }
    let clearance = end_gap.min(gap);
    Some(EquilibriumPoint {
        location: q,
        feature: Feature::Edge(edge),
        class: EqClass::Saddle,
        degenerate: clearance <= tol,
        clearance,
    })
}

fn vertex_test(p: &ConvexPolyhedron, c: &Vec3, vertex: usize, tol: f64) -> Option<EquilibriumPoint> {
    let vs = p.vertices();
    let v = vs[vertex];
    let u = (v - c).normalize();
    let gap = p.neighbors(vertex).iter().map(|&w| -u.dot(&(vs[w] - v))).fold(f64::INFINITY, f64::min);
    if gap < -tol {
        return None;
    }
    Some(EquilibriumPoint {
        location: v,
        feature: Feature::Vertex(vertex),
        class: EqClass::Unstable,
        degenerate: gap <= tol,
        clearance: gap,
    })
}

/// `S − H + U = 2` on a nondegenerate report.
pub fn poincare_hopf_check(report: &EquilibriumReport) -> Result<bool, EquilibriaError> {
    if report.any_degenerate {
        return Err(EquilibriaError::DegenerateReport);
    }
    Ok(report.euler_residual == 0)
}

/// Whether every reference point sampled in the ball of `radius` about `c`
/// yields the same equilibrium features as `c` itself.
///
/// Samples are uniform in the ball from a fixed-seed generator, so the scan
/// is reproducible. The ball must fit inside `p`.
pub fn reference_stability_scan(
    p: &ConvexPolyhedron,
    c: &Vec3,
    radius: f64,
    samples: usize,
) -> Result<bool, EquilibriaError> {
    let base = classify_equilibria(p, c)?;
    if base.any_degenerate {
        return Err(EquilibriaError::DegenerateReport);
    }
    if radius <= 0.0 {
        return Ok(true);
    }
    if p.planes().iter().any(|pl| -pl.signed_distance(c) <= radius) {
        return Err(EquilibriaError::ReferenceNotInterior);
    }
    let signature = |r: &EquilibriumReport| -> Vec<(EqClass, usize)> {
        r.points.iter().filter(|q| !q.degenerate).map(|q| (q.class, q.feature.id())).collect()
    };
    let want = signature(&base);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let offsets: Vec<Vec3> = (0..samples)
        .map(|_| loop {
            let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if v.norm_squared() <= 1.0 {
                break v * radius;
            }
        })
        .collect();
    for off in offsets {
        let r = classify_equilibria(p, &(c + off))?;
        if r.any_degenerate || r.counts() != base.counts() || signature(&r) != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Centroid shift under a clip against the volume removed:
/// `|c(P ∩ h) − c(P)| ≤ vΔ · r / vol(P ∩ h)` with `r` the circumradius of
/// `P` about its centroid.
pub fn centroid_shift_check(p: &ConvexPolyhedron, h: &HalfSpace) -> Result<bool, EquilibriaError> {
    let (shift, bound) = centroid_shift(p, h)?;
    Ok(shift <= bound)
}

/// `(|Δc|, bound)` for [`centroid_shift_check`]. The bound carries a
/// rounding allowance of a few ulps of the body's scale.
pub fn centroid_shift(p: &ConvexPolyhedron, h: &HalfSpace) -> Result<(f64, f64), EquilibriaError> {
    let full = mass_properties(p);
    let q = clip(p, h)?;
    let cut = mass_properties(&q);
    let r = p.radius_about(&full.centroid);
    let removed = (full.volume - cut.volume).max(0.0);
    let shift = (cut.centroid - full.centroid).norm();
    let bound = removed * r / cut.volume + 1e-14 * r;
    Ok((shift, bound))
}
