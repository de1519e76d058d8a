//! Coplanar face merging and removal of non-extreme vertices.

use super::{newell_plane, ConvexPolyhedron, Plane, Vec3, EPS_GEOM, MERGE_ANGLE};
use std::collections::{HashMap, HashSet};

/// Turns outward-oriented polygon faces of a convex surface into a
/// polyhedron satisfying the invariants.
///
/// Adjacent faces whose normals agree within [`MERGE_ANGLE`] and whose
/// vertices sit on a common plane within tolerance are fused. Vertices left
/// on fewer than three faces (on an edge or inside a face) are dropped and
/// the survivors renumbered in their original order.
pub fn normalize_faces(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> ConvexPolyhedron {
    let used: Vec<usize> = {
        let mut u: Vec<usize> = faces.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    };
    let avg = used.iter().map(|&i| vertices[i]).sum::<Vec3>() / used.len().max(1) as f64;
    let scale = used.iter().map(|&i| (vertices[i] - avg).norm()).fold(0.0, f64::max);
    let tol = EPS_GEOM * scale;

    let planes: Vec<Plane> = faces.iter().map(|f| newell_plane(&vertices, f)).collect();
    let mut owner: HashMap<(usize, usize), usize> = HashMap::with_capacity(faces.len() * 4);
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            owner.insert((f[i], f[(i + 1) % f.len()]), fi);
        }
    }

    // group faces by flood fill against the seed's plane
    let cos_merge = MERGE_ANGLE.cos();
    let mut group = vec![usize::MAX; faces.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for seed in 0..faces.len() {
        if group[seed] != usize::MAX {
            continue;
        }
        let gid = groups.len();
        group[seed] = gid;
        let sp = planes[seed];
        let mut members = vec![seed];
        let mut k = 0;
        while k < members.len() {
            let f = members[k];
            k += 1;
            let fv = &faces[f];
            for i in 0..fv.len() {
                let Some(&g) = owner.get(&(fv[(i + 1) % fv.len()], fv[i])) else { continue };
                if group[g] != usize::MAX {
                    continue;
                }
                let np = planes[g];
                let aligned = np.normal.dot(&sp.normal) >= cos_merge
                    || (np.normal - sp.normal).norm() < MERGE_ANGLE;
                if aligned && faces[g].iter().all(|&v| sp.signed_distance(&vertices[v]).abs() <= tol) {
                    group[g] = gid;
                    members.push(g);
                }
            }
        }
        groups.push(members);
    }

    let mut merged: Vec<Vec<usize>> = Vec::with_capacity(groups.len());
    for members in &groups {
        if members.len() == 1 {
            merged.push(faces[members[0]].clone());
            continue;
        }
        match boundary_cycle(&faces, members) {
            Some(cycle) => merged.push(cycle),
            None => merged.extend(members.iter().map(|&f| faces[f].clone())),
        }
    }

    // count distinct faces per vertex
    let mut count = vec![0usize; vertices.len()];
    for f in &merged {
        for &v in f {
            count[v] += 1;
        }
    }
    let keep: Vec<bool> = count.iter().map(|&c| c >= 3).collect();
    let mut remap = vec![usize::MAX; vertices.len()];
    let mut out_vertices = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        if keep[i] {
            remap[i] = out_vertices.len();
            out_vertices.push(*v);
        }
    }
    let out_faces: Vec<Vec<usize>> = merged
        .iter()
        .map(|f| f.iter().filter(|&&v| keep[v]).map(|&v| remap[v]).collect::<Vec<_>>())
        .filter(|f| f.len() >= 3)
        .collect();
    ConvexPolyhedron::from_raw(out_vertices, out_faces)
}

/// Outer boundary of a group of faces as a single vertex cycle, or `None`
/// when the boundary is not one simple loop.
fn boundary_cycle(faces: &[Vec<usize>], members: &[usize]) -> Option<Vec<usize>> {
    let mut inner: HashSet<(usize, usize)> = HashSet::new();
    for &f in members {
        let fv = &faces[f];
        for i in 0..fv.len() {
            inner.insert((fv[i], fv[(i + 1) % fv.len()]));
        }
    }
    let mut next: HashMap<usize, usize> = HashMap::new();
    let mut first = None;
    let mut count = 0;
    for &f in members {
        let fv = &faces[f];
        for i in 0..fv.len() {
            let (a, b) = (fv[i], fv[(i + 1) % fv.len()]);
            if inner.contains(&(b, a)) {
                continue;
            }
            if next.insert(a, b).is_some() {
                return None;
            }
            first.get_or_insert(a);
            count += 1;
        }
    }
    let start = first?;
    let mut cycle = vec![start];
    let mut cur = next[&start];
    while cur != start {
        cycle.push(cur);
        if cycle.len() > count {
            return None;
        }
        cur = *next.get(&cur)?;
    }
    (cycle.len() == count).then_some(cycle)
}
