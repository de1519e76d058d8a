//! Quasi-static tipping: a body resting on a face whose centroid foot lies
//! outside that face tips over an edge onto the neighbour, until it comes
//! to rest.

use crate::equilibria::{classify_equilibria, edge_violations, is_interior, EquilibriaError};
use crate::geom_core::{mass_properties, ConvexPolyhedron, Vec3, EPS_GEOM};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("foot of the reference point lies on the boundary of face {face}")]
    DegenerateRest { face: usize },
    #[error("no rest after {steps} tips")]
    NonTermination { steps: usize },
    #[error("potential did not decrease tipping from face {from} to face {to}")]
    PotentialIncrease { from: usize, to: usize },
    #[error("reference point is not strictly inside the polyhedron")]
    ReferenceNotInterior,
    #[error("face {0} out of range")]
    NoSuchFace(usize),
    #[error(transparent)]
    Equilibria(#[from] EquilibriaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Rest,
    Tip { next_face: usize, edge: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RollTrace {
    pub faces: Vec<usize>,
    /// Distance from the reference point to each resting face's plane.
    pub potentials: Vec<f64>,
    pub tipped_edges: Vec<usize>,
    /// Length of the path the reference point sweeps while rotating about
    /// the tipping edges.
    pub arc_length: f64,
}

impl RollTrace {
    pub fn final_face(&self) -> usize {
        *self.faces.last().expect("trace has a start face")
    }
}

/// One tipping decision from `face`.
///
/// Rest when the foot of `c` lies inside `face`. Otherwise the body tips
/// over the edge whose line the foot overshoots most; near-ties within
/// tolerance go to the smaller edge id.
pub fn roll_step(p: &ConvexPolyhedron, c: &Vec3, face: usize) -> Result<Step, DynamicsError> {
    if face >= p.num_faces() {
        return Err(DynamicsError::NoSuchFace(face));
    }
    step_within(p, c, face, EPS_GEOM * p.radius_about(c))
}

fn step_within(p: &ConvexPolyhedron, c: &Vec3, face: usize, tol: f64) -> Result<Step, DynamicsError> {
    let q = p.plane(face).project(c);
    let viol = edge_violations(p, face, &q);
    let worst = viol.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if worst < -tol {
        return Ok(Step::Rest);
    }
    if worst <= tol {
        return Err(DynamicsError::DegenerateRest { face });
    }
    let ids = p.face_edges(face);
    let edge = (0..viol.len()).filter(|&i| viol[i] >= worst - tol).map(|i| ids[i]).min().unwrap();
    let next_face = p.across(face, edge).ok_or(DynamicsError::NoSuchFace(face))?;
    Ok(Step::Tip { next_face, edge })
}

/// Rolls from `start` until rest, checking that the potential drops at
/// every tip. Capped at `10·F` tips.
pub fn roll_trace(p: &ConvexPolyhedron, c: &Vec3, start: usize) -> Result<RollTrace, DynamicsError> {
    if start >= p.num_faces() {
        return Err(DynamicsError::NoSuchFace(start));
    }
    let potential = |f: usize| -p.plane(f).signed_distance(c);
    let tol = EPS_GEOM * p.radius_about(c);
    if !is_interior(p, c, tol) {
        return Err(DynamicsError::ReferenceNotInterior);
    }
    let mut trace = RollTrace { faces: vec![start], potentials: vec![potential(start)], tipped_edges: vec![], arc_length: 0.0 };
    let cap = 10 * p.num_faces();
    let mut face = start;
    loop {
        match step_within(p, c, face, tol)? {
            Step::Rest => return Ok(trace),
            Step::Tip { next_face, edge } => {
                if trace.tipped_edges.len() >= cap {
                    return Err(DynamicsError::NonTermination { steps: cap });
                }
                let next_potential = potential(next_face);
                if next_potential >= *trace.potentials.last().unwrap() {
                    return Err(DynamicsError::PotentialIncrease { from: face, to: next_face });
                }
                trace.arc_length += tip_arc(p, c, face, next_face, edge);
                trace.faces.push(next_face);
                trace.potentials.push(next_potential);
                trace.tipped_edges.push(edge);
                face = next_face;
            }
        }
    }
}

/// Arc swept by `c` rotating about the edge line from resting on `from` to
/// resting on `to`: radius is the distance to the line, angle the turn
/// between the two face normals.
fn tip_arc(p: &ConvexPolyhedron, c: &Vec3, from: usize, to: usize, edge: usize) -> f64 {
    let e = &p.edges()[edge];
    let (a, b) = (p.vertices()[e.v[0]], p.vertices()[e.v[1]]);
    let d = (b - a).normalize();
    let w = c - a;
    let radius = (w - d * w.dot(&d)).norm();
    let angle = p.plane(from).normal.angle(&p.plane(to).normal);
    radius * angle
}

/// Final rest face from every start face, relative to `c`.
///
/// Each step is checked for potential decrease; results along a path are
/// shared, which keeps large meshes cheap.
pub fn rest_faces(p: &ConvexPolyhedron, c: &Vec3) -> Result<Vec<usize>, DynamicsError> {
    let tol = EPS_GEOM * p.radius_about(c);
    if !is_interior(p, c, tol) {
        return Err(DynamicsError::ReferenceNotInterior);
    }
    let steps: Vec<Step> = (0..p.num_faces()).into_par_iter().map(|f| step_within(p, c, f, tol)).collect::<Result<_, _>>()?;
    let potential = |f: usize| -p.plane(f).signed_distance(c);
    for (f, s) in steps.iter().enumerate() {
        if let Step::Tip { next_face, .. } = *s {
            if potential(next_face) >= potential(f) {
                return Err(DynamicsError::PotentialIncrease { from: f, to: next_face });
            }
        }
    }
    // potentials strictly drop along tips, so walking faces in increasing
    // potential order resolves each one from an already-resolved successor
    let mut order: Vec<usize> = (0..p.num_faces()).collect();
    order.sort_by(|&a, &b| potential(a).total_cmp(&potential(b)).then(a.cmp(&b)));
    let mut rest = vec![usize::MAX; p.num_faces()];
    for f in order {
        rest[f] = match steps[f] {
            Step::Rest => f,
            Step::Tip { next_face, .. } => rest[next_face],
        };
    }
    Ok(rest)
}

/// True iff exactly one face is stable relative to the centroid and every
/// face rolls onto it.
pub fn monostable_oracle(p: &ConvexPolyhedron) -> Result<bool, DynamicsError> {
    let c = mass_properties(p).centroid;
    let report = classify_equilibria(p, &c)?;
    if report.any_degenerate {
        return Err(DynamicsError::Equilibria(EquilibriaError::DegenerateReport));
    }
    let rest = rest_faces(p, &c)?;
    let stable = report.stable_faces();
    if stable.len() != 1 {
        return Ok(false);
    }
    Ok(rest.iter().all(|&f| f == stable[0]))
}
