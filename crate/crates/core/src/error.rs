use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("node {index:?} is not interior")]
    NotInterior { index: Vec<usize> },

    #[error("index {index:?} outside grid of shape {shape:?}")]
    IndexOutOfRange { index: Vec<usize>, shape: Vec<usize> },

    #[error("parabolicity violated: a_{axis} = {value} is not negative at {point:?}")]
    NotParabolic { axis: usize, value: f64, point: Vec<f64> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("stencil evaluation failed at node {node:?}: {reason}")]
    Stencil { node: Vec<usize>, reason: String },

    #[error("solver did not converge in {iterations} iterations (residual {residual:e})")]
    MaxIterations { iterations: usize, residual: f64 },

    #[error("solver breakdown after {iterations} iterations")]
    Breakdown { iterations: usize },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("time step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("degenerate amplification symbol (|denominator| = {0:e})")]
    DegenerateSymbol(f64),

    #[error("correlation matrix is not positive semidefinite")]
    NotPositiveSemidefinite,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
