//! Independent oracles. Nothing here calls into the predicates under test;
//! each check is recoded from the definitions with global scans.
#![allow(dead_code)]

use equilib::geom_core::ConvexPolyhedron;
use equilib::Vec3;
use nalgebra::Vector2;

pub type Vec2 = Vector2<f64>;

/// Census from the brute-force classifier. `borderline` is set when any
/// feature is too close to call at `slack`, in which case the counts are
/// not comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub s: usize,
    pub h: usize,
    pub u: usize,
    pub borderline: bool,
}

fn face_normal(p: &ConvexPolyhedron, f: &[usize]) -> Vec3 {
    // area vector from a fan, unrelated to the stored plane
    let v = p.vertices();
    let mut n = Vec3::zeros();
    for i in 1..f.len() - 1 {
        n += (v[f[i]] - v[f[0]]).cross(&(v[f[i + 1]] - v[f[0]]));
    }
    n.normalize()
}

/// Equilibria straight from the definition: a boundary point `q` whose
/// perpendicular plane to `q − c` supports every vertex, with the contact
/// equal to the carrying feature.
pub fn brute_census(p: &ConvexPolyhedron, c: &Vec3, slack: f64) -> Census {
    let v = p.vertices();
    let scale = v.iter().map(|x| (x - c).norm()).fold(0.0, f64::max);
    let tol = slack * scale;
    let mut out = Census { s: 0, h: 0, u: 0, borderline: false };

    // faces: the foot must sit strictly inside, tested with winding signs
    for f in p.faces() {
        let n = face_normal(p, f);
        let q = c - n * (c - v[f[0]]).dot(&n);
        let mut min_side = f64::INFINITY;
        for i in 0..f.len() {
            let a = v[f[i]];
            let b = v[f[(i + 1) % f.len()]];
            let side = (b - a).cross(&(q - a)).dot(&n) / (b - a).norm();
            min_side = min_side.min(side);
        }
        if min_side.abs() <= tol {
            out.borderline = true;
        } else if min_side > 0.0 {
            out.s += 1;
        }
    }

    // a supporting plane at q with normal d: gap to every vertex off the
    // feature must be positive
    let support_gap = |q: &Vec3, d: &Vec3, skip: &[usize]| -> f64 {
        v.iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(i))
            .map(|(_, x)| (q - x).dot(d))
            .fold(f64::INFINITY, f64::min)
    };

    for e in p.edges() {
        let (a, b) = (v[e.v[0]], v[e.v[1]]);
        let len = (b - a).norm();
        let t = (c - a).dot(&(b - a)) / (len * len);
        let along = (t.min(1.0 - t)) * len;
        if along.abs() <= tol {
            out.borderline = true;
            continue;
        }
        if along < 0.0 {
            continue;
        }
        let q = a + (b - a) * t;
        let d = (q - c).normalize();
        let gap = support_gap(&q, &d, &e.v);
        if gap.abs() <= tol {
            out.borderline = true;
        } else if gap > 0.0 {
            out.h += 1;
        }
    }

    for (i, x) in v.iter().enumerate() {
        let d = (x - c).normalize();
        let gap = support_gap(x, &d, &[i]);
        if gap.abs() <= tol {
            out.borderline = true;
        } else if gap > 0.0 {
            out.u += 1;
        }
    }
    out
}

/// Jarvis march perimeter of a planar point set.
pub fn gift_wrap_perimeter(pts: &[Vec2]) -> f64 {
    let start = (0..pts.len())
        .min_by(|&i, &j| pts[i].x.total_cmp(&pts[j].x).then(pts[i].y.total_cmp(&pts[j].y)))
        .unwrap();
    let cross = |o: Vec2, a: Vec2, b: Vec2| (a - o).perp(&(b - o));
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut cand = (cur + 1) % pts.len();
        for j in 0..pts.len() {
            let cr = cross(pts[cur], pts[cand], pts[j]);
            let farther = (pts[j] - pts[cur]).norm() > (pts[cand] - pts[cur]).norm();
            if cr < 0.0 || (cr == 0.0 && farther) {
                cand = j;
            }
        }
        cur = cand;
        if cur == start || hull.len() > pts.len() {
            break;
        }
        hull.push(cur);
    }
    (0..hull.len()).map(|i| (pts[hull[(i + 1) % hull.len()]] - pts[hull[i]]).norm()).sum()
}

/// Angle at `b` in the triangle `a b c`, from `atan2` of cross and dot.
pub fn angle_at(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    let (u, w) = (a - b, c - b);
    u.perp(&w).abs().atan2(u.dot(&w))
}

/// Volume and first moment from face-plane pyramids about the origin:
/// `V = Σ A·h / 3` and `M = Σ A·h·g / 4` summed over a triangle fan, with
/// `g` the centroid of each base triangle.
pub fn pyramid_mass(p: &ConvexPolyhedron) -> (f64, Vec3) {
    let v = p.vertices();
    let (mut vol, mut mom) = (0.0, Vec3::zeros());
    for f in p.faces() {
        for i in 1..f.len() - 1 {
            let (a, b, c) = (v[f[0]], v[f[i]], v[f[i + 1]]);
            let six = a.dot(&b.cross(&c));
            vol += six / 6.0;
            mom += (a + b + c) * (six / 24.0);
        }
    }
    (vol, mom)
}

/// Unit-length rotation of `v` about `axis` by `angle`.
pub fn rotate(v: &Vec3, axis: &Vec3, angle: f64) -> Vec3 {
    let k = axis.normalize();
    v * angle.cos() + k.cross(v) * angle.sin() + k * k.dot(v) * (1.0 - angle.cos())
}
