//! Constructive primitives: obtuse chains, meridian profiles, the
//! monostable generator, cone extensions and the truncation-safety test.

mod chain;
mod cone;
mod generator;
mod profile;

pub use chain::{conway_chain, ChainSpec};
pub use cone::{cone_extension, truncation_safety};
pub use generator::{
    default_columns, generate_monostable, AttemptRecord, GeneratorMode, GeneratorParams, GeneratorResult, EPS_SYM,
};
pub use profile::monotone_profile;

use crate::equilibria::EquilibriaError;
use crate::geom_core::GeomError;
use thiserror::Error;

pub type Vec2 = nalgebra::Vector2<f64>;

#[derive(Debug, Error, Clone)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible chain: cos^k(beta/k) = {reach} does not exceed target {target}")]
    InfeasibleChain { reach: f64, target: f64 },
    #[error("no monotone profile with k = {k} (apex radius would be {max_radius})")]
    InfeasibleProfile { k: usize, max_radius: f64 },
    #[error("generation failed after {attempts} attempts; best: {best:?}")]
    GenerationFailed { attempts: usize, best: Option<Box<AttemptRecord>>, log: Vec<AttemptRecord> },
    #[error("cone apex sees past the base face's neighbours")]
    ConvexityLoss,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Equilibria(#[from] EquilibriaError),
}
