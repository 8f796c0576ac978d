//! Particle (Escalator Boxcar Train) solver for a non-local cell
//! proliferation model reduced to radial coordinates, together with the
//! measure metrics used to assess it.
//!
//! The crate is organised around a small set of building blocks:
//!
//! * [`measure`] — finite discrete measures on the half-line, the common
//!   currency of every other module.
//! * [`kernel`] — closed-form radial interaction kernels in 2D and 3D with
//!   band-support queries.
//! * [`metric`] — distances between discrete measures: total variation,
//!   flat (bounded Lipschitz) norm, weighted flat norms, 1-Wasserstein
//!   under Euclidean and half-Hölder ground metrics, and the mass-split
//!   `rho` metric.
//! * [`scheme`] — the particle scheme itself: exact initialisation,
//!   banded interaction sums, explicit Euler stepping, runtime
//!   diagnostics.
//! * [`oracle`] — independent verification machinery: direct quadrature
//!   of the Cartesian convolution against the radial reduction, and an
//!   exact rational LP oracle for the flat norm.
//! * [`harness`] — paired-refinement error tables and convergence-order
//!   estimation.
//! * [`suite`] — the randomized property suites behind `validate`.

pub mod error;
pub mod harness;
pub mod kernel;
pub mod measure;
pub mod metric;
pub mod oracle;
pub mod quad;
pub mod scheme;
pub mod suite;

pub use error::Error;
pub use harness::ConvergenceRow;
pub use kernel::{Dimension, RadialKernel};
pub use measure::{DiscreteMeasure, MomentWeight, WeightSpec};
pub use metric::{GroundMetric, MetricKind, MetricSpec};
pub use scheme::{KernelBand, SchemeConfig, SchemeState};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
