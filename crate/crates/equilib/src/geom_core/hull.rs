//! Quickhull on triangles, followed by coplanar merging.
//!
//! Deterministic: the only choices made are argmax scans in index order.

use super::normalize::normalize_faces;
use super::{ConvexPolyhedron, GeomError, Vec3, EPS_GEOM};

struct Tri {
    v: [usize; 3],
    n: Vec3,
    off: f64,
    // nbr[i] lies across edge v[i] -> v[i+1]
    nbr: [usize; 3],
    outside: Vec<usize>,
    alive: bool,
}

impl Tri {
    fn new(pts: &[Vec3], v: [usize; 3]) -> Tri {
        let (a, b, c) = (pts[v[0]], pts[v[1]], pts[v[2]]);
        let n = (b - a).cross(&(c - a));
        let n = n / n.norm();
        let off = n.dot(&((a + b + c) / 3.0));
        Tri { v, n, off, nbr: [usize::MAX; 3], outside: Vec::new(), alive: true }
    }

    fn dist(&self, p: &Vec3) -> f64 {
        self.n.dot(p) - self.off
    }
}

/// Convex hull of a point cloud with coplanar faces merged.
///
/// Points within tolerance of the hull boundary are not promoted to
/// vertices. Errors with `DegenerateInput` when the cloud is flat.
pub fn convex_hull(points: &[Vec3]) -> Result<ConvexPolyhedron, GeomError> {
    if points.len() < 4 || points.iter().any(|p| !p.iter().all(|x| x.is_finite())) {
        return Err(GeomError::DegenerateInput);
    }
    let tris = hull_triangles(points)?;
    Ok(normalize_faces(points.to_vec(), tris))
}

pub(crate) fn hull_triangles(pts: &[Vec3]) -> Result<Vec<Vec<usize>>, GeomError> {
    let avg: Vec3 = pts.iter().sum::<Vec3>() / pts.len() as f64;
    let scale = pts.iter().map(|p| (p - avg).norm()).fold(0.0, f64::max);
    let tol = EPS_GEOM * scale;
    if scale == 0.0 {
        return Err(GeomError::DegenerateInput);
    }

    // initial simplex
    let argmax = |f: &dyn Fn(&Vec3) -> f64| {
        let mut best = (0usize, f64::NEG_INFINITY);
        for (i, p) in pts.iter().enumerate() {
            let v = f(p);
            if v > best.1 {
                best = (i, v);
            }
        }
        best
    };
    let i0 = argmax(&|p: &Vec3| -p.x).0;
    let (i1, d1) = argmax(&|p: &Vec3| (p - pts[i0]).norm());
    if d1 <= tol {
        return Err(GeomError::DegenerateInput);
    }
    let dir = (pts[i1] - pts[i0]) / d1;
    let (i2, d2) = argmax(&|p: &Vec3| {
        let w = p - pts[i0];
        (w - dir * w.dot(&dir)).norm()
    });
    if d2 <= tol {
        return Err(GeomError::DegenerateInput);
    }
    let n0 = (pts[i1] - pts[i0]).cross(&(pts[i2] - pts[i0])).normalize();
    let (i3, d3) = argmax(&|p: &Vec3| n0.dot(&(p - pts[i0])).abs());
    if d3 <= tol {
        return Err(GeomError::DegenerateInput);
    }

    let mut tris: Vec<Tri> = Vec::new();
    let above = n0.dot(&(pts[i3] - pts[i0])) > 0.0;
    // faces of the tetrahedron, outward
    let base = if above { [i0, i2, i1] } else { [i0, i1, i2] };
    let mut faces = vec![base];
    for k in 0..3 {
        let (a, b) = (base[k], base[(k + 1) % 3]);
        faces.push([b, a, i3]);
    }
    for f in &faces {
        tris.push(Tri::new(pts, *f));
    }
    link_all(&mut tris);

    // assign outside points
    for (i, p) in pts.iter().enumerate() {
        if [i0, i1, i2, i3].contains(&i) {
            continue;
        }
        let mut best = (usize::MAX, tol);
        for (fi, t) in tris.iter().enumerate() {
            let d = t.dist(p);
            if d > best.1 {
                best = (fi, d);
            }
        }
        if best.0 != usize::MAX {
            tris[best.0].outside.push(i);
        }
    }

    let mut stack: Vec<usize> = (0..tris.len()).filter(|&f| !tris[f].outside.is_empty()).collect();
    stack.reverse();
    let mut start_of = vec![usize::MAX; pts.len()];
    let mut visible_mark = vec![false; 0];
    let mut visited_mark = vec![false; 0];

    while let Some(f) = stack.pop() {
        if !tris[f].alive || tris[f].outside.is_empty() {
            continue;
        }
        let apex = {
            let t = &tris[f];
            let mut best = (t.outside[0], f64::NEG_INFINITY);
            for &q in &t.outside {
                let d = t.dist(&pts[q]);
                if d > best.1 {
                    best = (q, d);
                }
            }
            best.0
        };
        let p = pts[apex];

        // flood the visible region
        visible_mark.resize(tris.len(), false);
        visited_mark.resize(tris.len(), false);
        let mut visible = vec![f];
        visible_mark[f] = true;
        visited_mark[f] = true;
        let mut touched = vec![f];
        let mut k = 0;
        while k < visible.len() {
            let g = visible[k];
            k += 1;
            for e in 0..3 {
                let h = tris[g].nbr[e];
                if visited_mark[h] {
                    continue;
                }
                visited_mark[h] = true;
                touched.push(h);
                if tris[h].dist(&p) > tol {
                    visible_mark[h] = true;
                    visible.push(h);
                }
            }
        }

        // horizon edges (a, b, face beyond)
        let mut horizon: Vec<(usize, usize, usize)> = Vec::new();
        for &g in &visible {
            for e in 0..3 {
                let h = tris[g].nbr[e];
                if !visible_mark[h] {
                    horizon.push((tris[g].v[e], tris[g].v[(e + 1) % 3], h));
                }
            }
        }
        let mut simple = true;
        for &(a, _, _) in &horizon {
            if start_of[a] != usize::MAX {
                simple = false;
            }
            start_of[a] = 0;
        }
        for &(a, _, _) in &horizon {
            start_of[a] = usize::MAX;
        }
        if !simple {
            // numerically tangled horizon; treat the apex as on the boundary
            let t = &mut tris[f];
            t.outside.retain(|&q| q != apex);
            stack.push(f);
            for &g in &touched {
                visible_mark[g] = false;
                visited_mark[g] = false;
            }
            continue;
        }

        let first_new = tris.len();
        for (k, &(a, b, h)) in horizon.iter().enumerate() {
            let mut t = Tri::new(pts, [a, b, apex]);
            t.nbr[0] = h;
            tris.push(t);
            start_of[a] = first_new + k;
            let hv = tris[h].v;
            for e in 0..3 {
                if hv[e] == b && hv[(e + 1) % 3] == a {
                    tris[h].nbr[e] = first_new + k;
                }
            }
        }
        // across b -> apex sits the new face starting at b; that face sees
        // us across its apex -> b edge
        for (k, &(_, b, _)) in horizon.iter().enumerate() {
            let id = first_new + k;
            let next = start_of[b];
            tris[id].nbr[1] = next;
            tris[next].nbr[2] = id;
        }
        for &(a, _, _) in &horizon {
            start_of[a] = usize::MAX;
        }

        // redistribute orphaned points
        let mut orphans: Vec<usize> = Vec::new();
        for &g in &visible {
            tris[g].alive = false;
            orphans.append(&mut tris[g].outside);
        }
        for q in orphans {
            if q == apex {
                continue;
            }
            let mut best = (usize::MAX, tol);
            for id in first_new..tris.len() {
                let d = tris[id].dist(&pts[q]);
                if d > best.1 {
                    best = (id, d);
                }
            }
            if best.0 != usize::MAX {
                tris[best.0].outside.push(q);
            }
        }
        for id in (first_new..tris.len()).rev() {
            if !tris[id].outside.is_empty() {
                stack.push(id);
            }
        }
        for &g in &touched {
            if g < visible_mark.len() {
                visible_mark[g] = false;
                visited_mark[g] = false;
            }
        }
    }

    Ok(tris.iter().filter(|t| t.alive).map(|t| t.v.to_vec()).collect())
}

fn link_all(tris: &mut [Tri]) {
    for i in 0..tris.len() {
        for e in 0..3 {
            let (a, b) = (tris[i].v[e], tris[i].v[(e + 1) % 3]);
            for j in 0..tris.len() {
                if j == i {
                    continue;
                }
                for f in 0..3 {
                    if tris[j].v[f] == b && tris[j].v[(f + 1) % 3] == a {
                        tris[i].nbr[e] = j;
                    }
                }
            }
        }
    }
}
