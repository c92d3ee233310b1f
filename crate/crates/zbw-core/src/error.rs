//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A point lies outside the admissibility domain of a metric, or the
    /// metric degenerates there. The message names the violated bound.
    #[error("inadmissible point: {0}")]
    Domain(String),

    /// Array lengths do not match the dimension of the metric.
    #[error("shape mismatch: expected dimension {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    /// Operation defined only in a specific dimension (Hodge machinery, σ).
    #[error("unsupported dimension: {op} requires n = {required}, got n = {got}")]
    UnsupportedDimension {
        op: &'static str,
        required: usize,
        got: usize,
    },

    /// `γ = u·u ≤ 0` where a real `√γ` is required. Under signature
    /// `(+,−,…,−)` this means the tangent is not timelike.
    #[error(
        "signature error: gamma = u.u = {gamma} is not positive; \
         half-integer powers of gamma are undefined. Use GammaPolicy::Magnitude \
         to run with |gamma| instead"
    )]
    Signature { gamma: f64 },

    /// Tangent vector too close to null for the invariants to be meaningful.
    #[error("near-null tangent: |gamma| = {gamma_abs} below threshold {threshold}")]
    NearNull { gamma_abs: f64, threshold: f64 },

    /// Bad numerical-differentiation or stepper configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// A stated precondition does not hold (e.g. jet not natural-parameterized).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Post-condition check failed after an internally consistent computation;
    /// signals a formula regression, not bad user input.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// The integrator could not proceed (tolerance failure, non-finite state).
    #[error("integration failure at parameter {param}: {message}")]
    Integration { param: f64, message: String },
}
