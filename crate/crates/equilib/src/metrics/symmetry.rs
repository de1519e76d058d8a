use crate::geom_core::{ConvexPolyhedron, Vec3};
use nalgebra::{Rotation3, Unit};
use std::collections::HashMap;

/// Uniform-grid nearest neighbour index over a point set.
struct Grid<'a> {
    pts: &'a [Vec3],
    cell: f64,
    bins: HashMap<(i64, i64, i64), Vec<usize>>,
    span: i64,
}

impl<'a> Grid<'a> {
    fn new(pts: &'a [Vec3]) -> Self {
        let (mut lo, mut hi) = (pts[0], pts[0]);
        for p in pts {
            lo = lo.inf(p);
            hi = hi.sup(p);
        }
        let extent = (hi - lo).max().max(f64::MIN_POSITIVE);
        let cell = extent / (pts.len() as f64).cbrt().max(1.0);
        let mut bins: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
        let key = |p: &Vec3| ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64, (p.z / cell).floor() as i64);
        for (i, p) in pts.iter().enumerate() {
            bins.entry(key(p)).or_default().push(i);
        }
        let span = (extent / cell).ceil() as i64 + 2;
        Grid { pts, cell, bins, span }
    }

    fn nearest(&self, q: &Vec3) -> f64 {
        let c = ((q.x / self.cell).floor() as i64, (q.y / self.cell).floor() as i64, (q.z / self.cell).floor() as i64);
        let mut best = f64::INFINITY;
        for r in 0..=self.span.max(1) * 2 {
            // every point outside shell r is farther than (r) cells away
            if (r as f64 - 1.0) * self.cell > best {
                break;
            }
            for dx in -r..=r {
                for dy in -r..=r {
                    for dz in -r..=r {
                        if dx.abs().max(dy.abs()).max(dz.abs()) != r {
                            continue;
                        }
                        if let Some(list) = self.bins.get(&(c.0 + dx, c.1 + dy, c.2 + dz)) {
                            for &i in list {
                                best = best.min((self.pts[i] - q).norm());
                            }
                        }
                    }
                }
            }
        }
        best
    }
}

/// Hausdorff distance between the vertex set and its rotation by `2π/n`
/// about `axis` (through the origin), matched by nearest neighbour.
pub fn nfold_symmetry_residual(p: &ConvexPolyhedron, n: usize, axis: &Vec3) -> f64 {
    let vs = p.vertices();
    let grid = Grid::new(vs);
    let angle = std::f64::consts::TAU / n as f64;
    let rot = Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle);
    let mut worst: f64 = 0.0;
    // both directions of the Hausdorff distance: R·v against V, and
    // R⁻¹·v against V (the same as V against R·V)
    for r in [rot, rot.inverse()] {
        for v in vs {
            worst = worst.max(grid.nearest(&(r * v)));
        }
    }
    worst
}
