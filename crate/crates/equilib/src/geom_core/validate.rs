use super::{ConvexPolyhedron, MERGE_ANGLE};

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonFiniteVertex { vertex: usize },
    IsolatedVertex { vertex: usize },
    DegenerateFace { face: usize },
    NonCoplanar { face: usize, vertex: usize, distance: f64 },
    NonConvex { face: usize, vertex: usize, distance: f64 },
    CoplanarAdjacent { faces: [usize; 2] },
    EdgeIncidence { edge: [usize; 2], faces: usize },
    Orientation { edge: [usize; 2] },
    Euler { v: usize, e: usize, f: usize },
}

// above this many vertex-face pairs only nearby vertices are tested
const GLOBAL_CONVEXITY_LIMIT: usize = 40_000_000;

/// Every invariant breach found, in a fixed order. Empty means valid.
///
/// Convexity is checked against every face for small bodies. For large
/// ones each face is checked against vertices within two edge rings, which
/// on a closed oriented surface of genus zero is equivalent up to
/// tolerance (local convexity everywhere implies global convexity).
pub fn validate(p: &ConvexPolyhedron) -> Vec<Violation> {
    let mut out = Vec::new();
    let vs = p.vertices();
    for (i, v) in vs.iter().enumerate() {
        if !v.iter().all(|x| x.is_finite()) {
            out.push(Violation::NonFiniteVertex { vertex: i });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let tol = p.tolerance();
    let mut used = vec![false; vs.len()];
    for f in p.faces() {
        for &v in f {
            if v < vs.len() {
                used[v] = true;
            }
        }
    }
    for (i, &u) in used.iter().enumerate() {
        if !u {
            out.push(Violation::IsolatedVertex { vertex: i });
        }
    }

    for (fi, f) in p.faces().iter().enumerate() {
        let pl = p.plane(fi);
        if f.len() < 3 || pl.normal.norm() == 0.0 || f.iter().any(|&v| v >= vs.len()) {
            out.push(Violation::DegenerateFace { face: fi });
            continue;
        }
        for &v in f {
            let d = pl.signed_distance(&vs[v]);
            if d.abs() > tol {
                out.push(Violation::NonCoplanar { face: fi, vertex: v, distance: d });
            }
        }
    }

    let global = vs.len() * p.num_faces() <= GLOBAL_CONVEXITY_LIMIT;
    for fi in 0..p.num_faces() {
        let pl = p.plane(fi);
        if pl.normal.norm() == 0.0 {
            continue;
        }
        let candidates: Vec<usize> = if global {
            (0..vs.len()).collect()
        } else {
            let mut c: Vec<usize> = Vec::new();
            for &v in &p.faces()[fi] {
                for &w in p.neighbors(v) {
                    c.push(w);
                    c.extend_from_slice(p.neighbors(w));
                }
            }
            c.sort_unstable();
            c.dedup();
            c
        };
        let face = &p.faces()[fi];
        for v in candidates {
            if face.contains(&v) {
                continue;
            }
            let d = pl.signed_distance(&vs[v]);
            if d > tol {
                out.push(Violation::NonConvex { face: fi, vertex: v, distance: d });
            }
        }
    }

    for e in p.edges() {
        if e.faces.len() != 2 {
            out.push(Violation::EdgeIncidence { edge: e.v, faces: e.faces.len() });
            continue;
        }
        let (f, g) = (e.faces[0], e.faces[1]);
        if !runs(&p.faces()[f], e.v[0], e.v[1]) || !runs(&p.faces()[g], e.v[1], e.v[0]) {
            out.push(Violation::Orientation { edge: e.v });
        }
        let (nf, ng) = (p.plane(f).normal, p.plane(g).normal);
        if nf.norm() > 0.0 && ng.norm() > 0.0 && nf.angle(&ng) < MERGE_ANGLE {
            out.push(Violation::CoplanarAdjacent { faces: [f.min(g), f.max(g)] });
        }
    }

    let (v, e, f) = (vs.len(), p.num_edges(), p.num_faces());
    if v as i64 - e as i64 + f as i64 != 2 {
        out.push(Violation::Euler { v, e, f });
    }
    out
}

fn runs(face: &[usize], a: usize, b: usize) -> bool {
    (0..face.len()).any(|i| face[i] == a && face[(i + 1) % face.len()] == b)
}
