//! Core value types: complex numbers and error-carrying evaluations.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A function value together with an absolute-error estimate.
///
/// `abs_err` is an upper estimate of `|value - true value|` under the
/// producing module's stated error model. Successful operations never
/// return non-finite components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: Complex64,
    pub abs_err: f64,
}

impl Evaluation {
    pub fn new(value: Complex64, abs_err: f64) -> Self {
        debug_assert!(abs_err >= 0.0);
        Evaluation { value, abs_err }
    }

    /// Modulus of the value.
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }

    /// True when both components and the error estimate are finite.
    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite() && self.abs_err.is_finite()
    }
}
