//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("support point must be finite and non-negative, got {0}")]
    InvalidSupportPoint(f64),

    #[error("mass must be finite, got {0}")]
    InvalidMass(f64),

    #[error("points ({points}) and masses ({masses}) differ in length")]
    LengthMismatch { points: usize, masses: usize },

    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("weight 1/r^{exponent} undefined: nonzero mass {mass} at r = 0")]
    DivisionAtZero { exponent: f64, mass: f64 },

    #[error("weight exponent must be one of 0, 1/2, 1, 2, got {0}")]
    InvalidWeightExponent(f64),

    #[error("moment diverged (overflow) for weight {weight} on support up to {max_point}")]
    MomentOverflow { weight: &'static str, max_point: f64 },

    #[error("kernel arguments must be positive, got R = {r_big}, r = {r_small}")]
    KernelDomain { r_big: f64, r_small: f64 },

    #[error("operation requires a 3D kernel, got dimension {0}")]
    UnsupportedDimension(u8),

    #[error("invalid kernel parameter: {0}")]
    InvalidKernelParameter(String),

    #[error("total masses differ: {lhs} vs {rhs}")]
    MassMismatch { lhs: f64, rhs: f64 },

    #[error("measure must be non-empty with positive total mass")]
    EmptyMeasure,

    #[error("total mass must be nonzero, got {0}")]
    ZeroTotalMass(f64),

    #[error("signed measure passed where a non-negative one is required (mass {mass} at {point})")]
    NegativeMass { point: f64, mass: f64 },

    #[error("invalid scheme configuration: {0}")]
    InvalidConfig(String),

    #[error(
        "stability violation at t = {time}: dt * interaction sum = {product} > 1 at node {node}"
    )]
    StabilityViolation { time: f64, node: usize, product: f64 },

    #[error("growth ratio undefined: total weighted mass is zero")]
    UndefinedRatio,

    #[error("states are at different times: {lhs} vs {rhs}")]
    TimeMismatch { lhs: f64, rhs: f64 },

    #[error("coarse grid is not the even-index subset of the fine grid (first mismatch at index {index})")]
    GridMisaligned { index: usize },

    #[error("refinement levels must be a descending halving chain: {0}")]
    InvalidLevels(String),

    #[error("convergence order needs positive errors, got {coarse} and {fine}")]
    NonpositiveError { coarse: f64, fine: f64 },

    #[error("LP oracle supports at most {limit} points, got {got}")]
    OracleSizeLimit { limit: usize, got: usize },

    #[error("quadrature resolution must be at least {min}, got {got}")]
    ResolutionTooLow { min: usize, got: usize },

    #[error("linear program is unbounded")]
    UnboundedProgram,
}
