//! Numerical library for growth bounds of the zeta functional-equation
//! factor in the critical strip: the chi-factor and its closed-form moduli,
//! explicit bound chains, inverse-Mellin recoveries, Dirichlet chi_k / L_k
//! relations, Heaviside-form mu functions, empirical growth exponents and
//! mean-value moments, plus a sweep harness that turns each stated
//! inequality and identity into grid-checked records.

pub mod chifn;
pub mod error;
pub mod gammafn;
pub mod harness;
pub mod lindelof;
pub mod mellin;
pub mod types;
pub mod zetafn;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use types::Evaluation;
