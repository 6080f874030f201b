//! Error types shared by every numerical module.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the evaluators and the sweep harness.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument is (numerically) at a pole of the function.
    #[error("pole at s = {0}")]
    Pole(Complex64),

    /// Result magnitude exceeds the double exponent range.
    #[error("overflow: |Re log| = {0} exceeds double range")]
    Overflow(f64),

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Argument outside the supported numerical range.
    #[error("range error: {0}")]
    Range(String),

    /// Quadrature truncation did not settle within the requested tolerance.
    #[error("convergence error: window spread {spread} exceeds 10x tolerance {tol}")]
    Convergence { spread: f64, tol: f64 },

    /// Line of integration outside the strip where the representation is valid.
    #[error("contour error: {0}")]
    Contour(String),

    /// Too few usable windows for a least-squares slope fit.
    #[error("fit error: {0}")]
    Fit(String),

    /// Step-halving disagreement exceeded the quadrature sanity threshold.
    #[error("quadrature error: step-halving disagreement {0} exceeds 1%")]
    Quadrature(f64),

    /// Report or config I/O failure.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },

    /// Invalid harness configuration.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
