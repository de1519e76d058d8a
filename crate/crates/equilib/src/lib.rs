//! Static equilibria of convex polyhedra.
//!
//! The library classifies the stable, saddle and unstable equilibrium points
//! of a convex polyhedron relative to a reference point, builds homogeneous
//! monostable polyhedra with an n-fold symmetry axis close to the unit ball,
//! and checks the invariants that tie these together: the Poincaré–Hopf
//! relation, centroid-shift bounds, the diameter/girth bound and rolling
//! termination.
//!
//! Start with the `examples/` directory; each file drives one capability.

pub mod cli_io;
pub mod construct;
pub mod dynamics;
pub mod equilibria;
pub mod geom_core;
pub mod metrics;

pub use geom_core::{ConvexPolyhedron, HalfSpace, Plane, Vec3};
