use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical kernels and the criteria built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("QR iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("singular block {block} (smallest singular value {sigma_min:.3e})")]
    SingularBlock { block: &'static str, sigma_min: f64 },

    #[error("matrix is singular")]
    Singular,

    #[error("point z = {z} lies on the spectrum")]
    OnSpectrum { z: Complex64 },

    #[error("sample z = {z} lies on the spectrum and was rejected")]
    RejectedSample { z: Complex64 },

    #[error("interpolation at z = {z} is ill-posed: z is too close to the spectrum")]
    IllPosedInterpolation { z: Complex64 },

    #[error("contour does not enclose the spectrum: eigenvalue {eigenvalue} outside margin")]
    NotEnclosed { eigenvalue: Complex64 },

    #[error("too few quadrature nodes: {0}")]
    TooFewNodes(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("witness construction failed: {0}")]
    WitnessFailure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
