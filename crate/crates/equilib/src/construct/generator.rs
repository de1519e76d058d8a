//! Monostable polyhedra with an n-fold axis, close to the unit ball.
//!
//! A body of revolution cannot work here: its centroid coincides with that
//! of the solid of revolution swept by its face slices, and an obtuse
//! meridian chain around that point forces a second rest position. The
//! candidates are therefore built from two ingredients.
//!
//! * A meridian whose face-slice distance from a pivot grows as
//!   `d(ψ) = d0·exp(κ(ψ − ψ0))` with `κ` just above the obtuse-chain
//!   threshold `−ln cos Δ / Δ`. Faces of a revolved version of this
//!   meridian all roll downhill towards the bottom face, as long as the
//!   centroid stays below the pivot.
//! * `n` ridges ("tents") spanning `s` of the `m = n·s` azimuthal columns.
//!   Their log-radius rises towards the crest quickly enough that any face
//!   on a tent flank tips sideways, away from the crest, into a valley.
//!   Valleys lie on the revolved meridian and roll downhill. The tents carry
//!   extra mass in the lower half, which pulls the centroid below the pivot.
//!
//! Only the narrow valley columns need every ring; tent columns are sampled
//! on coarser rings, which keeps the vertex count down.

use super::ConstructError;
use crate::equilibria::{classify_equilibria, EquilibriumReport};
use crate::geom_core::{convex_hull, mass_properties, ConvexPolyhedron, Vec3, EPS_GEOM};
use crate::metrics::{hausdorff_to_ball, nfold_symmetry_residual};
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

/// Vertex-set matching tolerance for the n-fold symmetry check.
pub const EPS_SYM: f64 = 1e-9;

const PSI0: f64 = 0.15;
const KAPPA_FACTOR: f64 = 1.2;
const MU: f64 = 0.4;
const FADE_START: f64 = 1.0;
const FADE_END: f64 = 1.4;
const COARSE_STRIDE: f64 = 10.0;
const SPIKE_TAU: f64 = 0.03;
const MAX_RINGS: usize = 16_384;
// fraction of the Hausdorff budget the body may use radially
const RADIAL_BUDGET: f64 = 0.8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorMode {
    /// Single apex on the symmetry axis.
    AxisApex,
    /// `n` apexes pushed out from a ring of crest points.
    NSpikes,
}

impl GeneratorMode {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorMode::AxisApex => "axis_apex",
            GeneratorMode::NSpikes => "n_spikes",
        }
    }
}

impl std::str::FromStr for GeneratorMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "axis_apex" => Ok(GeneratorMode::AxisApex),
            "n_spikes" => Ok(GeneratorMode::NSpikes),
            _ => Err(format!("unknown mode {s:?} (expected axis_apex or n_spikes)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    /// Symmetry order, at least 3.
    pub n: usize,
    /// Columns per symmetry sector; odd values are used as given, even
    /// values are raised by one. `m = n·s` columns in total.
    pub s: usize,
    /// Hausdorff budget to the unit ball, in `(0, 0.5)`.
    pub eps: f64,
    /// Meridian rings.
    pub k: usize,
    pub mode: GeneratorMode,
    pub max_attempts: usize,
    /// Drives the small schedule perturbations applied on retries.
    pub seed: u64,
}

impl GeneratorParams {
    /// Defaults: 256 rings, the smallest odd `s ≥ 9` that leaves room for
    /// a sharp ridge, 16 attempts, seed 0.
    pub fn new(n: usize, eps: f64) -> Self {
        GeneratorParams {
            n,
            s: default_columns(n, eps),
            eps,
            k: 256,
            mode: GeneratorMode::AxisApex,
            max_attempts: 16,
            seed: 0,
        }
    }

    pub fn with_mode(mut self, mode: GeneratorMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn check(&self) -> Result<(), ConstructError> {
        if self.n < 3 {
            return Err(ConstructError::InvalidParams(format!("n = {} below 3", self.n)));
        }
        if !(self.eps > 0.0 && self.eps < 0.5) {
            return Err(ConstructError::InvalidParams(format!("eps = {} outside (0, 0.5)", self.eps)));
        }
        if self.s < 1 || self.n * self.s < 8 {
            return Err(ConstructError::InvalidParams(format!("m = n·s = {} below 8", self.n * self.s)));
        }
        if self.k < 8 {
            return Err(ConstructError::InvalidParams(format!("k = {} below 8", self.k)));
        }
        if self.max_attempts == 0 {
            return Err(ConstructError::InvalidParams("max_attempts must be positive".into()));
        }
        Ok(())
    }
}

/// One generator attempt, successful or not.
#[derive(Debug, Clone, PartialEq)]
pub struct AttemptRecord {
    pub attempt: usize,
    pub k: usize,
    pub s: usize,
    pub vertices: usize,
    pub counts: Option<(usize, usize, usize)>,
    pub degenerate: bool,
    pub hausdorff: Option<f64>,
    pub symmetry_residual: Option<f64>,
    pub outcome: String,
}

#[derive(Debug, Clone)]
pub struct GeneratorResult {
    /// Centred so that its centroid lies at the origin, axis along `z`.
    pub polyhedron: ConvexPolyhedron,
    /// Relative to the polyhedron's own centroid.
    pub report: EquilibriumReport,
    pub hausdorff: f64,
    pub symmetry_residual: f64,
    pub attempts: usize,
    pub k: usize,
    pub s: usize,
    pub log: Vec<AttemptRecord>,
}

/// Builds candidates and returns the first verified monostable one.
///
/// Attempt `a` uses the base parameters for `a = 0`, then alternately
/// doubles `k` and raises `s` by two (keeping it odd). Retries also jitter
/// the ridge schedule slightly, driven by `seed`.
pub fn generate_monostable(params: &GeneratorParams) -> Result<GeneratorResult, ConstructError> {
    params.check()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(params.seed);
    let (mut k, mut s) = (params.k, params.s | 1);
    let mut log = Vec::new();
    for attempt in 0..params.max_attempts {
        if attempt > 0 {
            if attempt % 2 == 1 && k * 2 <= MAX_RINGS {
                k *= 2;
            } else {
                s += 2;
            }
        }
        let jitter = if attempt == 0 { (0.0, 0.0) } else { (rng.gen_range(-0.05..0.05), rng.gen_range(-0.05..0.05)) };
        let recipe = Recipe {
            n: params.n,
            s,
            eps: params.eps,
            rings: k,
            mode: params.mode,
            mu: MU + jitter.0,
            fade_start: FADE_START + jitter.1,
        };
        let mut rec = AttemptRecord {
            attempt,
            k,
            s,
            vertices: 0,
            counts: None,
            degenerate: false,
            hausdorff: None,
            symmetry_residual: None,
            outcome: String::new(),
        };
        match evaluate(&recipe, &mut rec) {
            Some((polyhedron, report, hausdorff, symmetry_residual)) => {
                rec.outcome = "accepted".into();
                log.push(rec);
                return Ok(GeneratorResult {
                    polyhedron,
                    report,
                    hausdorff,
                    symmetry_residual,
                    attempts: attempt + 1,
                    k,
                    s,
                    log,
                });
            }
            None => log.push(rec),
        }
    }
    let best = log
        .iter()
        .min_by(|a, b| {
            let key = |r: &AttemptRecord| {
                let s_off = r.counts.map(|c| (c.0 as i64 - 1).unsigned_abs()).unwrap_or(u64::MAX);
                (s_off, r.degenerate, r.hausdorff.unwrap_or(f64::INFINITY))
            };
            let (ka, kb) = (key(a), key(b));
            (ka.0, ka.1).cmp(&(kb.0, kb.1)).then(ka.2.total_cmp(&kb.2))
        })
        .cloned();
    Err(ConstructError::GenerationFailed { attempts: params.max_attempts, best: best.map(Box::new), log })
}

fn evaluate(
    recipe: &Recipe,
    rec: &mut AttemptRecord,
) -> Option<(ConvexPolyhedron, EquilibriumReport, f64, f64)> {
    let points = match recipe.points() {
        Ok(p) => p,
        Err(why) => {
            rec.outcome = why;
            return None;
        }
    };
    let hull = match convex_hull(&points) {
        Ok(h) => h,
        Err(e) => {
            rec.outcome = format!("hull failed: {e}");
            return None;
        }
    };
    let c = mass_properties(&hull).centroid;
    // shift along the axis only, so the axis stays exactly z
    let p = hull.translated(&Vec3::new(0.0, 0.0, -c.z));
    rec.vertices = p.num_vertices();
    let c = mass_properties(&p).centroid;
    if c.xy().norm() > EPS_GEOM * p.radius_about(&c) {
        rec.outcome = format!("centroid off axis by {:.3e}", c.xy().norm());
        return None;
    }
    let report = match classify_equilibria(&p, &c) {
        Ok(r) => r,
        Err(e) => {
            rec.outcome = format!("classification failed: {e}");
            return None;
        }
    };
    rec.counts = Some(report.counts());
    rec.degenerate = report.any_degenerate;
    if report.s != 1 || report.any_degenerate {
        rec.outcome = format!("census {:?}, degenerate {}", report.counts(), report.any_degenerate);
        return None;
    }
    let sym = nfold_symmetry_residual(&p, recipe.n, &Vec3::z());
    rec.symmetry_residual = Some(sym);
    if sym >= EPS_SYM {
        rec.outcome = format!("symmetry residual {sym:.3e}");
        return None;
    }
    let hd = match hausdorff_to_ball(&p) {
        Ok(h) => h,
        Err(e) => {
            rec.outcome = format!("hausdorff failed: {e}");
            return None;
        }
    };
    rec.hausdorff = Some(hd.value);
    if hd.value + hd.error_bound >= recipe.eps {
        rec.outcome = format!("hausdorff {:.4} (+{:.1e}) not below eps", hd.value, hd.error_bound);
        return None;
    }
    Some((p, report, hd.value, sym))
}

/// Smallest odd `s ≥ 9` whose ridge budget leaves a parabolic share of at
/// least 0.15.
pub fn default_columns(n: usize, eps: f64) -> usize {
    let mut s = 9;
    while s < 401 {
        let r = Recipe { n, s, eps, rings: 256, mode: GeneratorMode::AxisApex, mu: MU, fade_start: FADE_START };
        if r.parabolic_share().map(|q| q >= 0.15).unwrap_or(false) {
            return s;
        }
        s += 2;
    }
    s
}

fn smoothstep(t: f64) -> f64 {
    let t = t.clamp(0.0, 1.0);
    t * t * (3.0 - 2.0 * t)
}

struct Recipe {
    n: usize,
    s: usize,
    eps: f64,
    rings: usize,
    mode: GeneratorMode,
    mu: f64,
    fade_start: f64,
}

struct Layout {
    psi: Vec<f64>,
    dist: Vec<f64>,
    fade: Vec<f64>,
    theta: f64,
    lambda: f64,
    half: usize,
    delta: f64,
}

impl Recipe {
    fn layout(&self) -> Layout {
        let m = self.n * self.s;
        let theta = 2.0 * PI / m as f64;
        let j = self.rings;
        let delta = (PI - PSI0) / j as f64;
        let kappa = KAPPA_FACTOR * (-delta.cos().ln()) / delta;
        let d0 = (1.0 - RADIAL_BUDGET * self.eps) / PSI0.cos();
        let psi: Vec<f64> = (0..=j).map(|i| PSI0 + delta * i as f64).collect();
        let dist = psi.iter().map(|&p| d0 * (kappa * (p - PSI0)).exp()).collect();
        let fade = psi.iter().map(|&p| 1.0 - smoothstep((p - self.fade_start) / (FADE_END - self.fade_start))).collect();
        Layout { psi, dist, fade, theta, lambda: -theta.cos().ln(), half: (self.s - 1) / 2, delta }
    }

    /// Largest parabolic share `q` of the ridge keeping every vertex
    /// within radius `1 + 0.8·eps` of the pivot, capped at 0.95.
    fn parabolic_share(&self) -> Option<f64> {
        let l = self.layout();
        let w = l.half as f64;
        let linear = l.lambda * (1.0 + self.mu) * w;
        let quad = l.lambda * w * (w - 1.0);
        if quad <= 0.0 {
            return (linear.is_finite()).then_some(0.95);
        }
        let rmax = 1.0 + RADIAL_BUDGET * self.eps;
        let c2 = (l.theta / 2.0).cos().powi(2);
        let mut q = 0.95f64;
        for i in 0..l.psi.len() {
            if l.fade[i] <= 1e-12 {
                continue;
            }
            let (ps, d) = (l.psi[i], l.dist[i]);
            let e2 = (rmax * rmax / (d * d) - ps.cos().powi(2)) * c2 / ps.sin().max(1e-9).powi(2);
            let lim = (0.5 * e2.max(1e-300).ln() - linear) / (l.fade[i] * quad);
            q = q.min(lim);
        }
        (q >= 0.0).then_some(q)
    }

    fn points(&self) -> Result<Vec<Vec3>, String> {
        let q_s = self.parabolic_share().ok_or_else(|| "ridge does not fit the radial budget".to_string())?;
        let l = self.layout();
        let (m, s, w) = (self.n * self.s, self.s, l.half);
        let j_max = self.rings;
        // log-radius lift of column offset kk from the crest
        let lift = |q: f64| -> Vec<f64> {
            let ell: Vec<f64> =
                (1..=w).map(|k| l.lambda * (1.0 + self.mu) + (w - k) as f64 * 2.0 * l.lambda * q).collect();
            (0..=w).map(|kk| ell[kk..].iter().sum()).collect()
        };
        let mut pts = Vec::new();
        let mut last = f64::NEG_INFINITY;
        for j in 0..j_max {
            let ps = l.psi[j];
            let coarse = j == 0
                || j == j_max - 1
                || ps - last >= COARSE_STRIDE * l.delta * ps.sin().powi(2) - 1e-12;
            if coarse {
                last = ps;
            }
            let lifts = lift(q_s * l.fade[j]);
            let base = l.dist[j] * ps.sin() / (l.theta / 2.0).cos();
            let z = -l.dist[j] * ps.cos();
            for col in 0..m {
                let kk = (col % s).min(s - col % s);
                let tent = kk < w;
                if tent && !coarse {
                    continue;
                }
                let r = base * if tent && j > 0 { lifts[kk].exp() } else { 1.0 };
                let ph = col as f64 * l.theta;
                pts.push(Vec3::new(r * ph.cos(), r * ph.sin(), z));
            }
        }
        pts.push(Vec3::new(0.0, 0.0, -l.dist[j_max] * l.psi[j_max].cos()));
        if self.mode == GeneratorMode::NSpikes {
            let jt = l.psi.partition_point(|&p| p < self.fade_start).min(j_max - 1);
            let ps = l.psi[jt];
            let lifts = lift(q_s * l.fade[jt]);
            let r = l.dist[jt] * ps.sin() / (l.theta / 2.0).cos() * lifts[0].exp() * (1.0 + SPIKE_TAU);
            let z = -l.dist[jt] * ps.cos() * (1.0 + SPIKE_TAU);
            for i in 0..self.n {
                let ph = 2.0 * PI * i as f64 / self.n as f64;
                pts.push(Vec3::new(r * ph.cos(), r * ph.sin(), z));
            }
        }
        Ok(pts)
    }
}
