//! Error types shared across the toolkit.

use num_complex::Complex64;

/// Errors produced by constructions, estimators and checks.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside its admissible domain.
    #[error("parameter domain: {0}")]
    Parameter(String),

    /// Input data is degenerate (repeated points, non-monotone arc length, ...).
    #[error("data: {0}")]
    Data(String),

    /// An iterative solver failed to converge; carries the final residual.
    #[error("numeric: {what} (residual {residual:.3e})")]
    Numeric { what: String, residual: f64 },

    /// A geometric consistency requirement failed (winding, injectivity, ...).
    #[error("geometry: {0}")]
    Geometry(String),

    /// A stated precondition of a check does not hold; carries a witness.
    #[error("precondition: {what} (witness {witness})")]
    Precondition { what: String, witness: Complex64 },

    /// Evaluation requested outside a map's validity region.
    #[error("evaluation domain: {0}")]
    Evaluation(String),

    /// A composition chain is incompatible at a validation point.
    #[error("composition: {0}")]
    Composition(String),

    /// Malformed serialized input (CSV / key-value text).
    #[error("parse: {0}")]
    Parse(String),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numeric(what: impl Into<String>, residual: f64) -> Self {
        Error::Numeric {
            what: what.into(),
            residual,
        }
    }

    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }

    pub fn precondition(what: impl Into<String>, witness: Complex64) -> Self {
        Error::Precondition {
            what: what.into(),
            witness,
        }
    }

    pub fn evaluation(msg: impl Into<String>) -> Self {
        Error::Evaluation(msg.into())
    }
}
