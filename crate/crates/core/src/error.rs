use num_complex::Complex64;
use thiserror::Error;

/// A gamma (or reciprocal-product) argument landed on a pole.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("pole at {location}: {context}")]
pub struct PoleError {
    pub location: Complex64,
    pub context: String,
}

impl PoleError {
    pub fn new(location: Complex64, context: impl Into<String>) -> Self {
        PoleError {
            location,
            context: context.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Pole(#[from] PoleError),

    /// An argument outside the domain of an operation (e.g. `0^t` with `Re t <= 0`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A determinant family's side condition failed before evaluation.
    #[error("side condition violated for {kind}: {condition} (node {index})")]
    SideCondition {
        kind: &'static str,
        condition: String,
        index: usize,
    },

    /// Two evaluation routes of one identity disagree.
    #[error("identity violation in {identity}: residual {residual:e} exceeds {tolerance:e} ({detail})")]
    IdentityViolation {
        identity: String,
        residual: f64,
        tolerance: f64,
        detail: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
