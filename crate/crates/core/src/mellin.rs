//! Numerical inverse-Mellin line integrals: recover λ(x) = 2cos(2πx) from
//! the contour integral of chi(1-s) x^{-s} over 0 < c < 1/2, and
//! (1/x) λ(1/x) from chi(s) x^{-s} over 1/2 < c < 1.
//!
//! The engine is a Filon-type rule: per panel the smooth phase is
//! linearized, the amplitude interpolated linearly, and the resulting
//! oscillator integrated exactly, so e^{-iτ log x} costs nothing in
//! resolution. Truncation ringing (the integrand decays only like
//! τ^{c-1/2}) is damped by averaging the partial integrals over trailing
//! windows; the window spread is the error estimate.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chifn;
use crate::error::{Error, Result};
use crate::types::Evaluation;

const TWO_PI: f64 = std::f64::consts::TAU;

/// Vertical-line contour and quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    /// Abscissa of the line of integration.
    pub c: f64,
    /// Truncation height before the averaging windows.
    #[serde(rename = "T")]
    pub t_max: f64,
    /// Quadrature panels per unit τ.
    pub panels: u32,
    /// Trailing windows averaged to damp truncation ringing.
    pub averaging_windows: u32,
}

impl ContourSpec {
    /// Defaults for the λ(x) integral: c in the middle of (0, 1/2).
    pub fn lambda_default() -> Self {
        ContourSpec {
            c: 0.25,
            t_max: 400.0,
            panels: 8,
            averaging_windows: 6,
        }
    }

    /// Defaults for the reciprocal integral: c in the middle of (1/2, 1).
    pub fn reciprocal_default() -> Self {
        ContourSpec {
            c: 0.75,
            t_max: 400.0,
            panels: 8,
            averaging_windows: 6,
        }
    }

    fn validate_base(&self) -> Result<()> {
        if self.t_max.is_nan() || self.t_max < 10.0 {
            return Err(Error::Domain(format!("T = {} must be >= 10", self.t_max)));
        }
        if self.panels < 4 {
            return Err(Error::Domain(format!(
                "panels = {} must be >= 4",
                self.panels
            )));
        }
        if self.averaging_windows == 0 {
            return Err(Error::Domain("averaging_windows must be >= 1".into()));
        }
        Ok(())
    }
}

/// Amplitude variation near τ = 0 (the Γ(c+iτ) near-pole at distance c) is
/// resolved by splitting panels below this height.
const REFINE_BELOW: f64 = 4.0;
const REFINE_FACTOR: u32 = 8;

/// (1/2π) ∫_{-T'}^{T'} m(τ) e^{i(φ(τ) - τ log x)} dτ with window-averaged
/// truncation.
///
/// `integrand` maps τ (either sign) to (modulus, unwrapped phase); the
/// oscillator e^{-iτ log x} is handled exactly. `tol` is the accuracy the
/// caller wants: a window spread above 10x of it raises ConvergenceError.
pub fn oscillatory_line_integral<F>(
    integrand: F,
    x: f64,
    spec: &ContourSpec,
    tol: f64,
) -> Result<Evaluation>
where
    F: Fn(f64) -> (f64, f64) + Sync,
{
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("x = {x} must be positive")));
    }
    spec.validate_base()?;

    let log_x = x.ln();
    // One ringing period of the truncated tail; 2π/|log x| degenerates as
    // x -> 1, where a fixed window and more of them take over.
    let (delta, windows) = if log_x.abs() < 0.5 {
        (4.0, spec.averaging_windows.max(12))
    } else {
        (
            (TWO_PI / log_x.abs()).clamp(1.0, 12.0),
            spec.averaging_windows,
        )
    };
    let t_total = spec.t_max + f64::from(windows) * delta;

    // node ladder on [0, t_total], refined below REFINE_BELOW
    let coarse = 1.0 / f64::from(spec.panels);
    let fine = coarse / f64::from(REFINE_FACTOR);
    let mut taus = Vec::with_capacity((t_total / coarse) as usize + 64);
    let mut t = 0.0;
    while t < t_total {
        taus.push(t);
        t += if t < REFINE_BELOW { fine } else { coarse };
    }
    taus.push(t);
    let n = taus.len();

    // integrand at +τ and -τ for every node, in parallel
    let values: Vec<((f64, f64), (f64, f64))> = taus
        .par_iter()
        .map(|&tau| (integrand(tau), integrand(-tau)))
        .collect();
    if values
        .iter()
        .any(|(p, m)| !(p.0.is_finite() && p.1.is_finite() && m.0.is_finite() && m.1.is_finite()))
    {
        return Err(Error::Domain(
            "integrand returned a non-finite value".into(),
        ));
    }

    // panel contributions (parallel), then a fixed-order prefix scan of the
    // symmetric partial integrals I(τ_i) = ∫_{-τ_i}^{τ_i}
    let panels: Vec<Complex64> = (0..n - 1)
        .into_par_iter()
        .map(|i| {
            let (p0, m0) = values[i];
            let (p1, m1) = values[i + 1];
            let pos = filon_panel(p0, p1, taus[i], taus[i + 1], log_x);
            let neg = filon_panel(m1, m0, -taus[i + 1], -taus[i], log_x);
            pos + neg
        })
        .collect();
    let mut partial = Vec::with_capacity(n);
    let mut acc = Complex64::new(0.0, 0.0);
    partial.push(acc);
    for p in &panels {
        acc += *p;
        partial.push(acc);
    }

    // trailing-window averaging of the partials
    let mut window_avgs = Vec::with_capacity(windows as usize);
    for w in 0..windows {
        let lo = spec.t_max + f64::from(w) * delta;
        let hi = lo + delta;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut count = 0usize;
        for (i, &tau) in taus.iter().enumerate() {
            if tau >= lo && tau <= hi {
                sum += partial[i];
                count += 1;
            }
        }
        if count == 0 {
            return Err(Error::Domain(
                "averaging window contains no quadrature node".into(),
            ));
        }
        window_avgs.push(sum / count as f64 / TWO_PI);
    }
    let mean = window_avgs.iter().sum::<Complex64>() / windows as f64;
    let spread = window_avgs
        .iter()
        .map(|v| (v - mean).norm())
        .fold(0.0, f64::max)
        * 2.0;
    if spread > 10.0 * tol {
        return Err(Error::Convergence { spread, tol });
    }
    Ok(Evaluation::new(mean, spread + 1e-14))
}

/// Exact integral over one panel of a linear amplitude against the
/// linearized total phase (integrand phase minus τ log x).
fn filon_panel(f0: (f64, f64), f1: (f64, f64), t0: f64, t1: f64, log_x: f64) -> Complex64 {
    let (m0, p0) = f0;
    let (m1, p1) = f1;
    let h = t1 - t0;
    let ph0 = p0 - t0 * log_x;
    let ph1 = p1 - t1 * log_x;
    let w = (ph1 - ph0) / h;
    if (w * h).abs() < 1e-8 {
        // flat phase: trapezoid with midpoint phase
        let mid = Complex64::new(0.0, 0.5 * (ph0 + ph1)).exp();
        return mid * (0.5 * h * (m0 + m1));
    }
    let iw = Complex64::new(0.0, w);
    let e = (iw * h).exp();
    let i0 = (e - Complex64::new(1.0, 0.0)) / iw;
    let i1 = (e * h - i0) / iw;
    Complex64::new(0.0, ph0).exp() * (i0 * m0 + i1 * ((m1 - m0) / h))
}

/// Accuracy targets the default contours are tuned for.
pub const LAMBDA_TOL: f64 = 1e-2;
pub const RECIPROCAL_TOL: f64 = 2e-2;

/// λ(x) = 2 cos(2πx) recovered from (1/2πi) ∫ chi(1-s) x^{-s} ds on
/// 0 < c < 1/2. Supported x range [0.25, 3].
pub fn inverse_mellin_lambda(x: f64, spec: &ContourSpec) -> Result<Evaluation> {
    if !(spec.c > 0.0 && spec.c < 0.5) {
        return Err(Error::Contour(format!(
            "c = {} outside (0, 1/2): the line cannot be moved out of the half strip",
            spec.c
        )));
    }
    if !(0.25..=3.0).contains(&x) {
        return Err(Error::Domain(format!(
            "x = {x} outside the supported accuracy range [0.25, 3]"
        )));
    }
    let c = spec.c;
    let amplitude = x.powf(-c);
    // chi(1-s) on s = c+iτ: argument (1-c) - iτ
    let integrand = move |tau: f64| -> (f64, f64) {
        let v = chifn::log_chi(Complex64::new(1.0 - c, -tau))
            .expect("chi is analytic on the line sigma = 1-c")
            .value;
        (amplitude * v.re.exp(), v.im)
    };
    oscillatory_line_integral(integrand, x, spec, LAMBDA_TOL)
}

/// (2/x) cos(2π/x) recovered from (1/2πi) ∫ chi(s) x^{-s} ds on
/// 1/2 < c < 1. Supported x range [0.5, 3].
pub fn inverse_mellin_reciprocal(x: f64, spec: &ContourSpec) -> Result<Evaluation> {
    if !(spec.c > 0.5 && spec.c < 1.0) {
        return Err(Error::Contour(format!(
            "c = {} outside (1/2, 1): the line cannot be moved out of the half strip",
            spec.c
        )));
    }
    if !(0.5..=3.0).contains(&x) {
        return Err(Error::Domain(format!(
            "x = {x} outside the supported accuracy range [0.5, 3]"
        )));
    }
    let c = spec.c;
    let amplitude = x.powf(-c);
    let integrand = move |tau: f64| -> (f64, f64) {
        let v = chifn::log_chi(Complex64::new(c, tau))
            .expect("chi is analytic on the line sigma = c")
            .value;
        (amplitude * v.re.exp(), v.im)
    };
    oscillatory_line_integral(integrand, x, spec, RECIPROCAL_TOL)
}
