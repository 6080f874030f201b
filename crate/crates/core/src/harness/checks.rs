//! The built-in check registry: every check the sweep can run, keyed by a
//! stable identifier, with its mathematical statement.

use num_complex::Complex64;

use crate::chifn::{self, BoundRecord, CharacterSpec};
use crate::gammafn::POLE_TOL;
use crate::lindelof::{self, HeavisideConvention};

const TWO_PI: f64 = std::f64::consts::TAU;

/// One registry entry.
#[derive(Debug, Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
}

/// Every check the harness knows. IDs are part of the stable interface.
pub const REGISTRY: [CheckDef; 15] = [
    CheckDef {
        id: "sharp-imag-axis",
        statement: "|chi(i tau)| <= sqrt(tau/2pi) on sigma = 0",
    },
    CheckDef {
        id: "critical-line-modulus",
        statement: "|chi(1/2 + i tau)| = 1 within 1e-9",
    },
    CheckDef {
        id: "affine-exponent",
        statement: "|chi| tau^(sigma-1/2) <= 8 on the half-strip, tau >= 1",
    },
    CheckDef {
        id: "asymptotic-ratio",
        statement: "|chi| / (tau/2pi)^(1/2-sigma) = 1 within 1e-2 for tau >= 2pi",
    },
    CheckDef {
        id: "reflection-identity",
        statement: "|chi(s) chi(1-s) - 1| <= 1e-9",
    },
    CheckDef {
        id: "mirror-symmetry",
        statement: "|chi(sigma+i tau)| = |chi(sigma-i tau)| within 1e-12",
    },
    CheckDef {
        id: "A5-majorant",
        statement: "|Gamma(1-s) sin(pi s/2)| <= 2 sqrt(2pi) |1-s|^(1/2-sigma), tau >= 1",
    },
    CheckDef {
        id: "A9-majorant",
        statement: "|1-s|^(1/2-sigma) <= 2 tau^(1/2-sigma), tau >= 1",
    },
    CheckDef {
        id: "K8-strip",
        statement: "|chi| <= 8 tau^(1/2-sigma) on the half-strip, tau >= 1",
    },
    CheckDef {
        id: "K8-global",
        statement: "|chi| <= max(8 tau^(1/2-sigma), 8) on the half-strip",
    },
    CheckDef {
        id: "heaviside-partition",
        statement: "H(sigma-1/2) + H(1/2-sigma) = 1 off the jump, 2 c0 < 1 at it",
    },
    CheckDef {
        id: "mu-closed-form",
        statement: "mu_chi(sigma) = (1/2-sigma) H(1/2-sigma) equals the piecewise form",
    },
    CheckDef {
        id: "mu-functional-eq",
        statement: "mu(sigma) - mu(1-sigma) = 1/2 - sigma exactly",
    },
    CheckDef {
        id: "chik-asymptotic",
        statement: "|chi_k| / ((k/2pi)^(1/2-sigma) tau^(1/2-sigma)) = 1 within 1e-2, tau >= 2pi",
    },
    CheckDef {
        id: "Lk-functional-eq",
        statement: "|L_k(s) - k^(1/2-s) chi(s) L_k(1-s)| <= 1e-8 for k = 5, 8, 12",
    },
];

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

pub fn is_known_check(id: &str) -> bool {
    REGISTRY.iter().any(|c| c.id == id)
}

fn in_half_strip(sigma: f64) -> bool {
    (-POLE_TOL..=0.5 + POLE_TOL).contains(&sigma)
}

/// Evaluate one check at one point. `None` means the check does not apply
/// there (its own precondition excludes the point); evaluation errors come
/// back as failed records carrying the reason.
pub fn evaluate_check(
    id: &str,
    sigma: f64,
    tau: f64,
    conv: HeavisideConvention,
) -> Option<BoundRecord> {
    let s = Complex64::new(sigma, tau);
    match id {
        "sharp-imag-axis"
        | "critical-line-modulus"
        | "A5-majorant"
        | "A9-majorant"
        | "K8-strip"
        | "K8-global" => {
            if !in_half_strip(sigma) {
                return None;
            }
            match chifn::chi_bound_suite(s) {
                Ok(records) => records.into_iter().find(|r| r.check_id == id),
                Err(e) => Some(BoundRecord::failed(id, s, e.to_string())),
            }
        }
        "affine-exponent" => {
            if !in_half_strip(sigma) || tau < 1.0 {
                return None;
            }
            Some(match chifn::chi(s) {
                Ok(v) => {
                    let lhs = v.modulus() * tau.powf(sigma - 0.5);
                    BoundRecord::bound(id, s, lhs, 8.0, 2e-10 * 8.0)
                }
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        "asymptotic-ratio" => {
            if tau < TWO_PI {
                return None;
            }
            Some(match chifn::chi(s) {
                Ok(v) => {
                    let lhs = v.modulus() / (tau / TWO_PI).powf(0.5 - sigma);
                    BoundRecord::identity(id, s, lhs, 1.0, 1e-2)
                }
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        "reflection-identity" => {
            if tau <= 0.0 {
                return None;
            }
            let product = chifn::chi(s)
                .and_then(|a| chifn::chi(Complex64::new(1.0, 0.0) - s).map(|b| a.value * b.value));
            Some(match product {
                Ok(p) => {
                    let lhs = (p - Complex64::new(1.0, 0.0)).norm();
                    BoundRecord::bound(id, s, lhs, 1e-9, 0.0)
                }
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        "mirror-symmetry" => {
            if tau <= 0.0 {
                return None;
            }
            let pair = chifn::chi(s).and_then(|a| chifn::chi(s.conj()).map(|b| (a, b)));
            Some(match pair {
                Ok((a, b)) => {
                    let lhs = (a.modulus() - b.modulus()).abs();
                    let rhs = 1e-12 * a.modulus().max(1.0);
                    BoundRecord::bound(id, s, lhs, rhs, 0.0)
                }
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        "heaviside-partition" => {
            let lhs =
                lindelof::heaviside(sigma - 0.5, conv) + lindelof::heaviside(0.5 - sigma, conv);
            let mut record = BoundRecord::bound(id, s, lhs, 1.0, 0.0);
            record.pass = if sigma == 0.5 { lhs < 1.0 } else { lhs == 1.0 };
            Some(record)
        }
        "mu-closed-form" => {
            let lhs = lindelof::mu_chi_closed(sigma, conv);
            let rhs = if sigma < 0.5 { 0.5 - sigma } else { 0.0 };
            Some(BoundRecord::identity(id, s, lhs, rhs, 0.0))
        }
        "mu-functional-eq" => {
            let lhs = lindelof::mu_functional_eq_residual(sigma, conv).abs();
            Some(BoundRecord::bound(id, s, lhs, 1e-15, 0.0))
        }
        "chik-asymptotic" => {
            if tau < TWO_PI {
                return None;
            }
            Some(match chifn::chi_k(s, 5) {
                Ok(v) => {
                    let expected = (5.0 / TWO_PI).powf(0.5 - sigma) * tau.powf(0.5 - sigma);
                    BoundRecord::identity(id, s, v.modulus() / expected, 1.0, 1e-2)
                }
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        "Lk-functional-eq" => {
            if tau <= 0.0 {
                return None;
            }
            Some(match lk_residual(s) {
                Ok(lhs) => BoundRecord::bound(id, s, lhs, 1e-8, 0.0),
                Err(e) => BoundRecord::failed(id, s, e.to_string()),
            })
        }
        _ => None,
    }
}

/// Worst functional-equation residual over the built-in moduli.
fn lk_residual(s: Complex64) -> crate::error::Result<f64> {
    let chi = chifn::chi(s)?;
    let mut worst = 0.0f64;
    for k in [5u32, 8, 12] {
        let spec = CharacterSpec::builtin(k)?;
        let lhs = chifn::l_function(s, &spec)?;
        let rhs = chifn::l_function(Complex64::new(1.0, 0.0) - s, &spec)?;
        let factor = ((Complex64::new(0.5, 0.0) - s) * f64::from(k).ln()).exp();
        let residual = (lhs.value - factor * chi.value * rhs.value).norm();
        worst = worst.max(residual);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_unique() {
        let ids = check_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(ids.len(), 15);
    }

    #[test]
    fn applicability_gates() {
        let conv = HeavisideConvention::default();
        // critical-line check applies only on sigma = 1/2
        assert!(evaluate_check("critical-line-modulus", 0.25, 5.0, conv).is_none());
        assert!(evaluate_check("critical-line-modulus", 0.5, 5.0, conv).is_some());
        // sharp axis bound only on sigma = 0
        assert!(evaluate_check("sharp-imag-axis", 0.5, 5.0, conv).is_none());
        assert!(evaluate_check("sharp-imag-axis", 0.0, 5.0, conv).is_some());
        // asymptotic ratio needs tau >= 2pi
        assert!(evaluate_check("asymptotic-ratio", 0.25, 1.0, conv).is_none());
        // unknown id
        assert!(evaluate_check("no-such-check", 0.25, 5.0, conv).is_none());
    }

    #[test]
    fn range_errors_become_failed_records() {
        let conv = HeavisideConvention::default();
        let r = evaluate_check("Lk-functional-eq", 0.25, 5e3, conv).unwrap();
        assert!(!r.pass);
        assert!(r.reason.is_some());
    }
}
