//! Small corpus of reference bodies.

use super::{convex_hull, ConvexPolyhedron, Vec3};

fn hull(points: Vec<Vec3>) -> ConvexPolyhedron {
    convex_hull(&points).expect("reference solid is full-dimensional")
}

/// Regular tetrahedron on alternate corners of the cube `[-1, 1]³`.
pub fn regular_tetrahedron() -> ConvexPolyhedron {
    hull(vec![
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(1.0, -1.0, -1.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-1.0, -1.0, 1.0),
    ])
}

/// Standard simplex with corners at the origin and the unit vectors.
pub fn standard_simplex() -> ConvexPolyhedron {
    hull(vec![Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::z()])
}

/// Unit cube `[0, 1]³`.
pub fn unit_cube() -> ConvexPolyhedron {
    let mut pts = Vec::new();
    for i in 0..8 {
        pts.push(Vec3::new((i & 1) as f64, ((i >> 1) & 1) as f64, ((i >> 2) & 1) as f64));
    }
    hull(pts)
}

/// Axis-aligned box `[0, a] × [0, b] × [0, c]`.
pub fn cuboid(a: f64, b: f64, c: f64) -> ConvexPolyhedron {
    unit_cube().map_vertices(|v| Vec3::new(v.x * a, v.y * b, v.z * c))
}

pub fn octahedron() -> ConvexPolyhedron {
    let mut pts = Vec::new();
    for k in 0..3 {
        for s in [1.0, -1.0] {
            let mut v = Vec3::zeros();
            v[k] = s;
            pts.push(v);
        }
    }
    hull(pts)
}

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

pub fn icosahedron() -> ConvexPolyhedron {
    hull(icosahedron_points())
}

fn icosahedron_points() -> Vec<Vec3> {
    let g = golden();
    let mut pts = Vec::new();
    for a in [1.0, -1.0] {
        for b in [g, -g] {
            pts.push(Vec3::new(0.0, a, b));
            pts.push(Vec3::new(a, b, 0.0));
            pts.push(Vec3::new(b, 0.0, a));
        }
    }
    pts
}

pub fn dodecahedron() -> ConvexPolyhedron {
    let g = golden();
    let h = 1.0 / g;
    let mut pts = Vec::new();
    for x in [1.0, -1.0] {
        for y in [1.0, -1.0] {
            for z in [1.0, -1.0] {
                pts.push(Vec3::new(x, y, z));
            }
        }
    }
    for a in [h, -h] {
        for b in [g, -g] {
            pts.push(Vec3::new(0.0, a, b));
            pts.push(Vec3::new(a, b, 0.0));
            pts.push(Vec3::new(b, 0.0, a));
        }
    }
    hull(pts)
}

/// The five Platonic solids with their names, in face-count order.
pub fn platonic() -> Vec<(&'static str, ConvexPolyhedron)> {
    vec![
        ("tetrahedron", regular_tetrahedron()),
        ("cube", unit_cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("icosahedron", icosahedron()),
    ]
}

/// Geodesic sphere: icosahedron faces split `4^level` times, vertices
/// pushed onto the unit sphere. Level 4 has 2562 vertices.
pub fn icosphere(level: u32) -> ConvexPolyhedron {
    let ico = icosahedron();
    let mut pts: Vec<Vec3> = ico.vertices().iter().map(|v| v.normalize()).collect();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for f in ico.faces() {
        tris.push([f[0], f[1], f[2]]);
    }
    for _ in 0..level {
        let mut mid = std::collections::HashMap::new();
        let mut next = Vec::with_capacity(tris.len() * 4);
        let mut midpoint = |a: usize, b: usize, pts: &mut Vec<Vec3>| -> usize {
            *mid.entry((a.min(b), a.max(b))).or_insert_with(|| {
                pts.push(((pts[a] + pts[b]) * 0.5).normalize());
                pts.len() - 1
            })
        };
        for t in &tris {
            let ab = midpoint(t[0], t[1], &mut pts);
            let bc = midpoint(t[1], t[2], &mut pts);
            let ca = midpoint(t[2], t[0], &mut pts);
            next.push([t[0], ab, ca]);
            next.push([t[1], bc, ab]);
            next.push([t[2], ca, bc]);
            next.push([ab, bc, ca]);
        }
        tris = next;
    }
    hull(pts)
}

/// Right prism over a regular `n`-gon of circumradius `r`, height `h`,
/// base in the plane `z = 0`.
pub fn prism(n: usize, r: f64, h: f64) -> ConvexPolyhedron {
    let mut pts = Vec::new();
    for z in [0.0, h] {
        for i in 0..n {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            pts.push(Vec3::new(r * a.cos(), r * a.sin(), z));
        }
    }
    hull(pts)
}

/// Uniform point in the unit ball by rejection.
pub fn random_in_ball<R: rand::Rng>(rng: &mut R) -> Vec3 {
    loop {
        let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if v.norm_squared() <= 1.0 {
            return v;
        }
    }
}

/// Hull of `count` uniform points in the unit ball.
pub fn random_hull<R: rand::Rng>(rng: &mut R, count: usize) -> ConvexPolyhedron {
    loop {
        let pts: Vec<Vec3> = (0..count).map(|_| random_in_ball(rng)).collect();
        if let Ok(p) = convex_hull(&pts) {
            return p;
        }
    }
}
