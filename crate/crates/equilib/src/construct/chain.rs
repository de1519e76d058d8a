use super::{ConstructError, Vec2};

/// Parameters of an obtuse chain from `(1, 0)` towards a point at polar
/// angle `beta` and radius `target_radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainSpec {
    pub beta: f64,
    pub target_radius: f64,
    pub k: usize,
}

impl ChainSpec {
    /// `cos^k(beta/k)`, the largest final radius reachable with right angles.
    pub fn reach(&self) -> f64 {
        (self.beta / self.k as f64).cos().powi(self.k as i32)
    }

    pub fn is_feasible(&self) -> bool {
        self.reach() > self.target_radius
    }
}

/// Chain `x_0..x_k` with `x_i` at polar angle `i·beta/k`, radii strictly
/// decreasing from 1 to `target_radius`, and every angle `x_{i-1} x_i o`
/// strictly obtuse.
///
/// The right-angle chain `r_i = cos^i(beta/k)` overshoots the target; the
/// surplus ratio `t = target / cos^k(beta/k)` is spread evenly, giving
/// `r_i = (t^{1/k} cos(beta/k))^i`. Each step then shrinks by strictly more
/// than `cos(beta/k)`, which is exactly the obtuseness condition.
pub fn conway_chain(spec: &ChainSpec) -> Result<Vec<Vec2>, ConstructError> {
    let ChainSpec { beta, target_radius, k } = *spec;
    if !(beta > 0.0 && beta < std::f64::consts::PI) {
        return Err(ConstructError::InvalidParams(format!("beta {beta} outside (0, pi)")));
    }
    if !(target_radius > 0.0 && target_radius < 1.0) {
        return Err(ConstructError::InvalidParams(format!("target radius {target_radius} outside (0, 1)")));
    }
    if k == 0 {
        return Err(ConstructError::InvalidParams("k must be positive".into()));
    }
    let reach = spec.reach();
    if reach <= target_radius {
        return Err(ConstructError::InfeasibleChain { reach, target: target_radius });
    }
    let step = beta / k as f64;
    let ratio = step.cos() * (target_radius / reach).powf(1.0 / k as f64);
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let r = if i == k { target_radius } else { ratio.powi(i as i32) };
        let a = step * i as f64;
        out.push(Vec2::new(r * a.cos(), r * a.sin()));
    }
    Ok(out)
}
