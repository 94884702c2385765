use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Error)]
pub enum SolverError {
    #[error("non-positive density {0}")]
    NonPositiveDensity(f64),
    #[error("non-positive pressure {0}")]
    NonPositivePressure(f64),
    #[error("invalid gas parameters: gamma = {0} (must exceed 1)")]
    InvalidGamma(f64),
    #[error("axis Y is not available for a 1-D state")]
    AxisInvalid,
    #[error("degenerate wave fan: speed spread {0} is not positive")]
    DegenerateWaveFan(f64),
    #[error("minmod of an empty sequence")]
    EmptyInput,
    #[error("stencil needs {needed} cells, got {got}")]
    InsufficientStencil { needed: usize, got: usize },
    #[error("order {order} does not match the supplied correction terms")]
    OrderCorrectionMismatch { order: u8 },
    #[error("unsupported order {0} (expected 1, 2, 3 or 5)")]
    UnsupportedOrder(u8),
    #[error("periodic boundary must be set on both opposing sides")]
    InconsistentPeriodicPair,
    #[error("global maximum signal speed is zero")]
    ZeroWaveSpeed,
    #[error("time step collapsed to {dt:e} at t = {time}")]
    StepCollapse { dt: f64, time: f64 },
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("position ({x}, {y}) lies outside the problem domain")]
    OutOfDomain { x: f64, y: f64 },
    #[error("problem {0} has no exact solution")]
    NoExactSolution(String),
    #[error("grids do not match: {0}")]
    GridMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("I/O failure on {path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV failure on {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

pub type Result<T> = std::result::Result<T, SolverError>;
