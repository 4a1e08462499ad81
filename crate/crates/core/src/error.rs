//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A deformation parameter violates its domain (p,q > 0, all finite).
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A computed magnitude left the f64 range; the log-scaled value is
    /// carried so callers can still reason about sign and size.
    #[error("value out of f64 range at n={n}: sign {sign}, ln|value| = {ln_abs}")]
    Overflow { n: i64, sign: i8, ln_abs: f64 },

    /// The structure function turned negative where a square root is needed.
    #[error("structure function negative at n={n}: f({n}) = {value}")]
    Positivity { n: i64, value: f64 },

    /// An index or argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A representation case needs an input that was not supplied.
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),

    /// No irreducible representation exists for the given data.
    #[error("no representation: {0}")]
    NoRepresentation(String),

    /// The 1-dimensional representation has K = −1/(2γ), singular at γ=0.
    #[error("K is undefined for the one-dimensional representation at γ=0")]
    SingularK,
}
