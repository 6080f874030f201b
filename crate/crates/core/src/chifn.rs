//! The chi-factor of the Riemann functional equation in overflow-safe log
//! space, its closed forms, sharp bounds and asymptotics, and the Dirichlet
//! generalization chi_k / L_k for even real primitive characters.
//!
//! chi(s) = (1/π) (2π)^s sin(πs/2) Γ(1-s), assembled as
//!   log chi = -ln π + s ln 2π + log sin(πs/2) + log Γ(1-s)
//! with the log-sin branch continuous along lines of constant Re s, so the
//! phase can be consumed directly by oscillatory quadrature.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gammafn::{self, POLE_TOL};
use crate::types::Evaluation;
use crate::zetafn;

const PI: f64 = std::f64::consts::PI;
const LN_PI: f64 = 1.1447298858494001741;
const LN_2PI: f64 = 1.8378770664093454836;
const LN_2: f64 = std::f64::consts::LN_2;
const TWO_PI: f64 = std::f64::consts::TAU;

/// log chi(s), branch continuous in Im s along constant Re s, conjugate
/// symmetric. The imaginary part is the unwrapped phase of chi.
pub fn log_chi(s: Complex64) -> Result<Evaluation> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if s.im < 0.0 {
        let v = log_chi(s.conj())?;
        return Ok(Evaluation::new(v.value.conj(), v.abs_err));
    }
    if s.im < POLE_TOL {
        if let Some(kind) = integer_singularity(s.re) {
            return match kind {
                Singularity::Pole => Err(Error::Pole(s)),
                Singularity::Removable(k) => Ok(log_chi_even_limit(k)),
            };
        }
        return log_chi_real(s.re);
    }
    let lg = gammafn::log_gamma(Complex64::new(1.0, 0.0) - s)?;
    let lsin = log_sin_half_pi(s);
    let value = Complex64::new(-LN_PI, 0.0) + s * LN_2PI + lsin + lg.value;
    let scale = s.norm() * LN_2PI + lsin.norm() + 1.0;
    let err = lg.abs_err + 4.0 * f64::EPSILON * scale;
    Ok(Evaluation::new(value, err))
}

/// chi(s) = (1/π)(2π)^s sin(πs/2) Γ(1-s).
///
/// Poles sit at s = 1 and at odd integers s >= 3, where the pole of Γ(1-s)
/// is not cancelled. At even integers s >= 2 the sin zero cancels the pole
/// and the finite limit (-1)^k (2π)^{2k} / (2 (2k-1)!) is returned. At even
/// integers s <= 0 the value is exactly 0.
pub fn chi(s: Complex64) -> Result<Evaluation> {
    if s.im.abs() < POLE_TOL {
        if let Some(Singularity::Removable(_)) = integer_singularity(s.re) {
            // exp(log limit) cached below; recompute value with sign
            let lv = log_chi(Complex64::new(s.re, 0.0))?;
            return Ok(exp_log_chi(lv));
        }
        if is_even_nonpositive(s.re) {
            return Ok(Evaluation::new(Complex64::new(0.0, 0.0), 1e-300));
        }
    }
    let lv = log_chi(s)?;
    Ok(exp_log_chi(lv))
}

/// The algebraically equivalent form π^{s-1/2} Γ((1-s)/2) / Γ(s/2), used as
/// an independent cross-check of `chi` and for the L_k functional equation.
pub fn chi_symmetric(s: Complex64) -> Result<Evaluation> {
    let lga = gammafn::log_gamma((Complex64::new(1.0, 0.0) - s) / 2.0)?;
    let lgb = gammafn::log_gamma(s / 2.0)?;
    let log_value = (s - Complex64::new(0.5, 0.0)) * LN_PI + lga.value - lgb.value;
    if log_value.re.abs() > 709.0 {
        return Err(Error::Overflow(log_value.re.abs()));
    }
    let value = log_value.exp();
    let rel = lga.abs_err + lgb.abs_err + 4.0 * f64::EPSILON * (s.norm() * LN_PI + 1.0);
    Ok(Evaluation::new(value, value.norm() * rel + 1e-300))
}

/// |chi(it)| = sqrt(t/2π) (1 - e^{-πt}) / sqrt(1 - e^{-2πt}) for t > 0.
pub fn abs_chi_imag_axis(t: f64) -> Result<f64> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::Domain(format!("t = {t} must be positive")));
    }
    let num = -(-PI * t).exp_m1();
    let den = (-(-2.0 * PI * t).exp_m1()).sqrt();
    Ok((t / TWO_PI).sqrt() * num / den)
}

/// The leading asymptotic (t/2π)^{1/2-σ} of |chi(σ+iτ)| as τ grows.
pub fn chi_asymptotic(s: Complex64) -> Result<f64> {
    if s.im.is_nan() || s.im <= 0.0 {
        return Err(Error::Domain(format!("tau = {} must be positive", s.im)));
    }
    Ok((s.im / TWO_PI).powf(0.5 - s.re))
}

/// chi_k(s) = k^{1/2-s} chi(s), computed in log space.
pub fn chi_k(s: Complex64, k: u32) -> Result<Evaluation> {
    if k == 0 {
        return Err(Error::Domain("modulus k must be positive".into()));
    }
    let ln_k = f64::from(k).ln();
    if s.im.abs() < POLE_TOL && is_even_nonpositive(s.re) {
        return Ok(Evaluation::new(Complex64::new(0.0, 0.0), 1e-300));
    }
    let lv = log_chi(s)?;
    let log_value = lv.value + (Complex64::new(0.5, 0.0) - s) * ln_k;
    if log_value.re.abs() > 709.0 {
        return Err(Error::Overflow(log_value.re.abs()));
    }
    let value = log_value.exp();
    let rel = lv.abs_err + 4.0 * f64::EPSILON * (1.0 + s.norm() * ln_k);
    Ok(Evaluation::new(value, value.norm() * rel + 1e-300))
}

fn exp_log_chi(lv: Evaluation) -> Evaluation {
    // the real-axis paths mark sign with an exact phase of 0 or π
    let value = if lv.value.im == 0.0 {
        Complex64::new(lv.value.re.exp(), 0.0)
    } else if lv.value.im == PI {
        Complex64::new(-lv.value.re.exp(), 0.0)
    } else {
        lv.value.exp()
    };
    Evaluation::new(value, value.norm() * lv.abs_err + 1e-300)
}

enum Singularity {
    Pole,
    /// Removable at s = 2k; payload is k >= 1.
    Removable(u32),
}

/// Classify real s near an integer singularity of the chi product form.
fn integer_singularity(x: f64) -> Option<Singularity> {
    let n = x.round();
    if (x - n).abs() >= POLE_TOL || n < 1.0 {
        return None;
    }
    let n = n as i64;
    if n == 1 || n % 2 == 1 {
        Some(Singularity::Pole)
    } else {
        Some(Singularity::Removable((n / 2) as u32))
    }
}

fn is_even_nonpositive(x: f64) -> bool {
    let n = x.round();
    (x - n).abs() < POLE_TOL && n <= 0.0 && (n as i64).rem_euclid(2) == 0
}

/// log of the removable-singularity limit chi(2k) = (-1)^k (2π)^{2k}/(2 (2k-1)!).
fn log_chi_even_limit(k: u32) -> Evaluation {
    let two_k = f64::from(2 * k);
    let lg = gammafn::log_gamma(Complex64::new(two_k, 0.0))
        .expect("2k >= 2 is not a pole")
        .value
        .re; // ln((2k-1)!)
    let log_abs = two_k * LN_2PI - LN_2 - lg;
    let im = if k % 2 == 1 { PI } else { 0.0 };
    Evaluation::new(Complex64::new(log_abs, im), 1e-13 * (1.0 + log_abs.abs()))
}

/// chi on the real axis away from integer singularities, in log space.
fn log_chi_real(x: f64) -> Result<Evaluation> {
    let sin_val = (PI * x / 2.0).sin();
    if sin_val == 0.0 {
        // even x <= 0: chi = 0, log diverges
        return Ok(Evaluation::new(Complex64::new(f64::NEG_INFINITY, 0.0), 0.0));
    }
    let lg = gammafn::log_gamma(Complex64::new(1.0 - x, 0.0))?;
    let gamma_sign = real_gamma_sign(1.0 - x);
    let log_abs = -LN_PI + x * LN_2PI + sin_val.abs().ln() + lg.value.re;
    let negative = (sin_val < 0.0) != (gamma_sign < 0);
    let im = if negative { PI } else { 0.0 };
    Ok(Evaluation::new(
        Complex64::new(log_abs, im),
        lg.abs_err + 4.0 * f64::EPSILON * (1.0 + log_abs.abs()),
    ))
}

fn real_gamma_sign(x: f64) -> i32 {
    if x > 0.0 || (x.floor() as i64).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// log sin(πs/2) for Im s > 0, continuous in Im s at fixed Re s:
/// sin(πs/2) = (i/2) e^{-iπs/2} (1 - e^{iπs}).
pub(crate) fn log_sin_half_pi(s: Complex64) -> Complex64 {
    debug_assert!(s.im > 0.0);
    let q = (Complex64::new(0.0, PI) * s).exp();
    Complex64::new(-LN_2, 0.5 * PI) - Complex64::new(0.0, 0.5 * PI) * s
        + (Complex64::new(1.0, 0.0) - q).ln()
}

// ---------------------------------------------------------------------------
// Bound records
// ---------------------------------------------------------------------------

/// One inequality/identity check at one sample point.
///
/// `margin` is always rhs - lhs. For one-sided bounds `pass` means
/// margin >= -tol with the check's declared slack; for two-sided identity
/// checks `pass` means |margin| <= tol, which is strictly stronger.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub check_id: String,
    pub sigma: f64,
    pub tau: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl BoundRecord {
    pub fn bound(check_id: &str, s: Complex64, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = rhs - lhs;
        BoundRecord {
            check_id: check_id.to_string(),
            sigma: s.re,
            tau: s.im,
            lhs,
            rhs,
            margin,
            pass: margin >= -tol,
            reason: None,
        }
    }

    pub fn identity(check_id: &str, s: Complex64, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = rhs - lhs;
        BoundRecord {
            check_id: check_id.to_string(),
            sigma: s.re,
            tau: s.im,
            lhs,
            rhs,
            margin,
            pass: margin.abs() <= tol,
            reason: None,
        }
    }

    pub fn failed(check_id: &str, s: Complex64, reason: String) -> Self {
        BoundRecord {
            check_id: check_id.to_string(),
            sigma: s.re,
            tau: s.im,
            lhs: 0.0,
            rhs: 0.0,
            margin: 0.0,
            pass: false,
            reason: Some(reason),
        }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.sigma, self.tau)
    }
}

/// Slack for one-sided bounds: covers evaluation rounding, nothing more.
pub(crate) fn bound_slack(rhs: f64) -> f64 {
    2e-10 * rhs.abs().max(1.0)
}

/// Tolerance for the critical-line modulus identity.
pub const CRITICAL_LINE_TOL: f64 = 1e-9;

/// Evaluate the explicit bound chain and the closed-form bounds at one
/// point of the half-strip 0 <= σ <= 1/2. Emits the records that apply at
/// the point: `K8-strip` and the majorants `A5-majorant`/`A9-majorant` need
/// τ >= 1, `sharp-imag-axis` applies on σ = 0, `critical-line-modulus` on
/// σ = 1/2, and `K8-global` everywhere.
pub fn chi_bound_suite(s: Complex64) -> Result<Vec<BoundRecord>> {
    if !((-POLE_TOL..=0.5 + POLE_TOL).contains(&s.re)) {
        return Err(Error::Domain(format!(
            "sigma = {} outside the half-strip [0, 1/2]",
            s.re
        )));
    }
    let sigma = s.re;
    let tau = s.im;
    let exponent = 0.5 - sigma;
    let abs_chi = chi(s)?.modulus();
    let mut records = Vec::with_capacity(6);

    if tau >= 1.0 {
        let rhs = 8.0 * tau.powf(exponent);
        records.push(BoundRecord::bound(
            "K8-strip",
            s,
            abs_chi,
            rhs,
            bound_slack(rhs),
        ));
    }
    {
        let rhs = (8.0 * tau.abs().powf(exponent)).max(8.0);
        records.push(BoundRecord::bound(
            "K8-global",
            s,
            abs_chi,
            rhs,
            bound_slack(rhs),
        ));
    }
    if sigma.abs() < POLE_TOL && tau > 0.0 {
        let rhs = (tau / TWO_PI).sqrt();
        records.push(BoundRecord::bound(
            "sharp-imag-axis",
            s,
            abs_chi,
            rhs,
            bound_slack(rhs),
        ));
    }
    if (sigma - 0.5).abs() < POLE_TOL {
        records.push(BoundRecord::identity(
            "critical-line-modulus",
            s,
            abs_chi,
            1.0,
            CRITICAL_LINE_TOL,
        ));
    }
    if tau >= 1.0 {
        // |Γ(1-s) sin(πs/2)| <= 2 sqrt(2π) |1-s|^{1/2-σ}   (A.5)
        let lg = gammafn::log_gamma(Complex64::new(1.0, 0.0) - s)?;
        let lsin = log_sin_half_pi(s);
        let lhs = (lg.value.re + lsin.re).exp();
        let r = (Complex64::new(1.0, 0.0) - s).norm();
        let rhs = 2.0 * TWO_PI.sqrt() * r.powf(exponent);
        records.push(BoundRecord::bound(
            "A5-majorant",
            s,
            lhs,
            rhs,
            bound_slack(rhs),
        ));

        // |1-s|^{1/2-σ} <= 2 τ^{1/2-σ}   (A.9)
        let lhs9 = r.powf(exponent);
        let rhs9 = 2.0 * tau.powf(exponent);
        records.push(BoundRecord::bound(
            "A9-majorant",
            s,
            lhs9,
            rhs9,
            bound_slack(rhs9),
        ));
    }
    Ok(records)
}

// ---------------------------------------------------------------------------
// Dirichlet characters and L-functions
// ---------------------------------------------------------------------------

/// A real Dirichlet character mod k given by its value table on residues
/// 0..k. Valid specs are completely multiplicative, even (χ(-1) = 1),
/// primitive, and vanish exactly on residues not coprime to k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterSpec {
    pub modulus: u32,
    pub values: Vec<i8>,
}

impl CharacterSpec {
    pub fn new(modulus: u32, values: Vec<i8>) -> Result<Self> {
        let spec = CharacterSpec { modulus, values };
        spec.validate()?;
        Ok(spec)
    }

    /// The built-in even real primitive characters: k = 5, 8, 12.
    pub fn builtin(k: u32) -> Result<Self> {
        let values: Vec<i8> = match k {
            5 => vec![0, 1, -1, -1, 1],
            8 => vec![0, 1, 0, -1, 0, -1, 0, 1],
            12 => vec![0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1],
            _ => {
                return Err(Error::Domain(format!(
                    "no built-in character for modulus {k} (have 5, 8, 12)"
                )))
            }
        };
        CharacterSpec::new(k, values)
    }

    pub fn value(&self, n: u64) -> i8 {
        self.values[(n % u64::from(self.modulus)) as usize]
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.modulus as usize;
        if k < 3 {
            return Err(Error::Domain(format!(
                "modulus {k} has no even real primitive character"
            )));
        }
        if self.values.len() != k {
            return Err(Error::Domain(format!(
                "value table has {} entries for modulus {k}",
                self.values.len()
            )));
        }
        if self.values.iter().any(|v| !(-1..=1).contains(v)) {
            return Err(Error::Domain(
                "character values must lie in {-1,0,1}".into(),
            ));
        }
        for a in 0..k {
            let coprime = gcd(a as u64, k as u64) == 1;
            if coprime == (self.values[a] == 0) {
                return Err(Error::Domain(format!(
                    "character must vanish exactly on residues not coprime to {k} (fails at {a})"
                )));
            }
        }
        for a in 1..k {
            for b in a..k {
                let lhs = self.values[(a * b) % k];
                let rhs = self.values[a] * self.values[b];
                if lhs != rhs {
                    return Err(Error::Domain(format!(
                        "character not completely multiplicative at ({a}, {b}) mod {k}"
                    )));
                }
            }
        }
        if self.values[k - 1] != 1 {
            return Err(Error::Domain("character is odd: χ(-1) != 1".into()));
        }
        // primitivity: for every proper divisor d there is a ≡ 1 (mod d),
        // coprime to k, with χ(a) != 1
        for d in 1..k {
            if !k.is_multiple_of(d) {
                continue;
            }
            let witness = (1..k)
                .step_by(d)
                .any(|a| a % d == 1 % d && gcd(a as u64, k as u64) == 1 && self.values[a] != 1);
            if !witness {
                return Err(Error::Domain(format!(
                    "character induced by a character mod {d}: not primitive"
                )));
            }
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// L(s, χ) = k^{-s} Σ_{a=1}^{k} χ(a) ζ(s, a/k), entire for these characters.
pub fn l_function(s: Complex64, chi_spec: &CharacterSpec) -> Result<Evaluation> {
    chi_spec.validate()?;
    let k = chi_spec.modulus;
    let kf = f64::from(k);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for a in 1..=k {
        let coeff = chi_spec.values[(a % k) as usize];
        if coeff == 0 {
            continue;
        }
        let h = zetafn::hurwitz_zeta(s, f64::from(a) / kf)?;
        sum += h.value * f64::from(coeff);
        err += h.abs_err;
    }
    let scale = (-s * kf.ln()).exp();
    let value = scale * sum;
    let abs_err = scale.norm() * (err + f64::EPSILON * sum.norm() * kf) + 1e-300;
    Ok(Evaluation::new(value, abs_err))
}
