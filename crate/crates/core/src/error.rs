//! Error type shared across the library.

use thiserror::Error;

/// Everything that can go wrong while validating or transforming states.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix entry was NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// A matrix or vector had the wrong dimension for the operation.
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    /// `‖m − m†‖_max` exceeded the Hermiticity tolerance.
    #[error("matrix is not Hermitian: max |m - m†| = {max_deviation:.3e} > tol {tol:.3e}")]
    NotHermitian { max_deviation: f64, tol: f64 },

    /// The Jacobi iteration failed to push the off-diagonal mass below the
    /// convergence threshold within the sweep budget.
    #[error("eigensolver did not converge: off-diagonal norm {off_diagonal:.3e} after {sweeps} sweeps")]
    NoConvergence { off_diagonal: f64, sweeps: usize },

    /// Trace deviated from one beyond tolerance.
    #[error("trace is not one: trace = {trace:.12} (|trace - 1| > {tol:.3e})")]
    TraceNotOne { trace: f64, tol: f64 },

    /// The most negative eigenvalue fell below the admissible floor.
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e} < -{tol:.3e}")]
    NotPositive { min_eigenvalue: f64, tol: f64 },

    /// Mixture weights were negative or did not sum to one.
    #[error("bad mixture weights: {reason}")]
    BadWeights { reason: String },

    /// Pure states in a mixture disagreed on the Schmidt dimension.
    #[error("mixed Schmidt dimensions: expected {expected}, got {actual}")]
    MixedDimensions { expected: usize, actual: usize },

    /// A local spectrum contained a repeated eigenvalue, so the sum
    /// λ_m¹ + λ_n² = λ no longer determines n from m.
    #[error("degenerate spectrum {which}: entries {i} and {j} agree to {gap:.3e}")]
    DegenerateSpectrum {
        which: u8,
        i: usize,
        j: usize,
        gap: f64,
    },

    /// Two distinct λ-maps claimed the same (m, n) pair.
    #[error("disjointness violated: pair(s) {pairs:?} claimed by more than one map")]
    DisjointnessViolated { pairs: Vec<(usize, usize)> },

    /// A λ-map repeated an index within itself.
    #[error("map is not injective: {coordinate} index {index} repeated")]
    NotInjective {
        coordinate: &'static str,
        index: usize,
    },

    /// A local basis factor failed the unitarity check.
    #[error("factor u{factor} is not unitary: max |u†u - I| = {max_deviation:.3e}")]
    NotUnitary { factor: u8, max_deviation: f64 },

    /// An integrated or assembled state drifted outside density-matrix
    /// tolerances.
    #[error("validation failed ({context}): {source}")]
    ValidationFailed {
        context: String,
        #[source]
        source: Box<Error>,
    },

    /// Sample times were not nonnegative and strictly increasing.
    #[error("invalid time grid: {reason}")]
    InvalidTimes { reason: String },

    /// An input file could not be parsed against its schema.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Wrap a validation failure with the context it occurred in.
    pub(crate) fn validation(context: impl Into<String>, source: Error) -> Self {
        Error::ValidationFailed {
            context: context.into(),
            source: Box::new(source),
        }
    }
}
