use super::{ConstructError, Vec2};
use std::f64::consts::PI;

/// Meridian polyline from a bottom rim point to an apex on the positive
/// axis, radii strictly increasing, in `(horizontal, axial)` coordinates.
///
/// Polar angles (from the positive axis) are `π − Δ/2 − iΔ` with
/// `Δ = π/(k + 1/2)`, so the last point lands on the axis. Radii start as a
/// geometric interpolation from `1 − eps/2` to `1 + eps/2`, then each is
/// raised as needed so that `r_{i-1} < r_i cos Δ`: the reversed polyline is
/// an obtuse chain. Fails when the repaired radii leave the annulus
/// `[1 − eps, 1 + eps]` or the apex is not beyond the unit sphere.
pub fn monotone_profile(eps: f64, k: usize) -> Result<Vec<Vec2>, ConstructError> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(ConstructError::InvalidParams(format!("eps {eps} outside (0, 0.5)")));
    }
    if k < 1 {
        return Err(ConstructError::InfeasibleProfile { k, max_radius: f64::INFINITY });
    }
    let delta = PI / (k as f64 + 0.5);
    let lo = 1.0 - eps / 2.0;
    let g = ((1.0 + eps / 2.0) / lo).powf(1.0 / k as f64);
    let grow = (1.0 + 1e-9) / delta.cos();
    let mut radii = Vec::with_capacity(k + 1);
    radii.push(lo);
    for i in 1..=k {
        let geometric = lo * g.powi(i as i32);
        let prev: f64 = radii[i - 1];
        let need = if delta.cos() > 0.0 { prev * grow } else { f64::INFINITY };
        radii.push(geometric.max(need));
    }
    let max_radius = radii[k];
    if !(max_radius < 1.0 + eps && max_radius > 1.0) {
        return Err(ConstructError::InfeasibleProfile { k, max_radius });
    }
    Ok(radii
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let phi = if i == k { 0.0 } else { PI - delta / 2.0 - delta * i as f64 };
            Vec2::new(r * phi.sin().max(0.0), r * phi.cos())
        })
        .collect())
}
