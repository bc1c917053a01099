use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state has zero norm")]
    ZeroState,

    #[error("generalized binomial ({x} choose {n}) has a negative factor")]
    NegativeCoefficient { x: f64, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("truncation too small: tail mass {tail_mass:e} beyond dimension {dim}")]
    TruncationTooSmall { tail_mass: f64, dim: usize },

    #[error("Fock index {n} out of range for dimension {dim}")]
    IndexOutOfRange { n: usize, dim: usize },

    #[error("quadrature did not converge: refinement changed result by {delta:e} (tolerance {tolerance:e})")]
    QuadratureNotConverged { delta: f64, tolerance: f64 },

    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
