//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by grid construction, operators, transforms, products,
/// solvers, and the CSV/JSON interfaces.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("shift {value} is not an integer multiple of the lattice spacing {spacing}")]
    NonLatticeShift { value: f64, spacing: f64 },

    #[error("dilation factor {factor} unsupported (only 2 and 1/2)")]
    UnsupportedDilation { factor: f64 },

    #[error("window has zero norm")]
    ZeroWindow,

    #[error("analysis and synthesis windows are numerically orthogonal")]
    OrthogonalWindows,

    #[error("Wigner transform imaginary residue {residue:.3e} exceeds 1e-6; grid too coarse for this signal")]
    NonHermitianResidue { residue: f64 },

    #[error("grid size n={n} exceeds the direct-quadrature cap {cap}")]
    GridTooLarge { n: usize, cap: usize },

    #[error("window must be real with unit norm for this representation")]
    WindowNotRealUnit,

    #[error("norm grew by more than 10% in step {step}; integration diverged")]
    StepDiverged { step: usize },

    #[error("trajectory has {got} samples; at least {need} required")]
    InsufficientSamples { got: usize, need: usize },

    #[error("malformed CSV at line {line}: {reason}")]
    MalformedCsv { line: usize, reason: String },

    #[error("grid mismatch: expected {expected} values, got {got}")]
    GridMismatch { expected: usize, got: usize },

    #[error("check `{anchor}` failed: residual {residual:.3e} > tolerance {tolerance:.3e}")]
    CheckFailed {
        anchor: String,
        residual: f64,
        tolerance: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
