//! Crate-wide error type.
//!
//! Numerical payloads are stored as `f64` regardless of the working scalar;
//! they are for diagnostics only.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Operands have incompatible shapes.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A square matrix was required.
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    /// Basis members failed a structural requirement (shape, independence).
    #[error("invalid operator basis: {0}")]
    InvalidBasis(String),

    /// A tabulated signal was evaluated outside its grid.
    #[error("drive signal evaluated outside its domain at t = {t}")]
    SignalDomain { t: f64 },

    /// The adaptive stepper could not meet the tolerance.
    #[error("integration failed at t = {last_good_time}: {reason}")]
    IntegrationFailure { last_good_time: f64, reason: String },

    /// The Riccati variable exceeded the pole guard and no fallback was allowed.
    #[error("|mu_plus| = {magnitude:.3e} exceeded the pole guard at t = {t}")]
    PoleGuard { t: f64, magnitude: f64 },

    /// A requested output time sits exactly on a pole of the Riccati variable.
    #[error("mu_plus has a pole at requested sample t = {t}")]
    PoleAtSample { t: f64 },

    /// A density matrix violated positivity or normalization beyond tolerance.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Scenario or file configuration rejected.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Lie closure grew past the requested cap (payload dropped; see
    /// `algebra::ClosureOverflow` for the carrying variant).
    #[error("lie closure exceeded max dimension {max_dim} (reached {reached})")]
    ClosureOverflow { max_dim: usize, reached: usize },
}

pub type Result<V, E = Error> = std::result::Result<V, E>;
