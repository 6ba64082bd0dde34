use thiserror::Error;

use crate::exact::ConstantAtom;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine ran out of budget; `partial` is the best estimate reached.
    #[error("no convergence in {routine}: partial estimate {partial:e}, error estimate {error_estimate:e}")]
    Convergence {
        routine: &'static str,
        partial: f64,
        error_estimate: f64,
    },

    #[error("capacity exceeded: weight {weight} above configured maximum {max}")]
    Capacity { weight: usize, max: usize },

    #[error("series shape mismatch: {0}")]
    Shape(String),

    #[error("no numeric value for atom {0}")]
    MissingAtom(ConstantAtom),

    /// Two independent symbolic routes to the same quantity disagreed.
    #[error("route mismatch for {quantity}: residual {residual}")]
    RouteMismatch { quantity: String, residual: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
