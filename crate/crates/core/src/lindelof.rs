//! Heaviside-form mu functions, empirical growth-exponent estimation from
//! windowed modulus maxima, and the k = 1, 2 mean-value moment integrals on
//! the critical line.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chifn;
use crate::error::{Error, Result};
use crate::zetafn::{self, ZetaConfig};

/// H(0) := c0 with c0 in the open interval (0, 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeavisideConvention {
    c0: f64,
}

impl HeavisideConvention {
    pub fn new(c0: f64) -> Result<Self> {
        if !(c0 > 0.0 && c0 < 0.5) {
            return Err(Error::Domain(format!(
                "c0 = {c0} outside the open (0, 1/2)"
            )));
        }
        Ok(HeavisideConvention { c0 })
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }
}

impl Default for HeavisideConvention {
    /// Midpoint of the allowed interval.
    fn default() -> Self {
        HeavisideConvention { c0: 0.25 }
    }
}

/// Unit step with the jump value pinned to the convention: 1 for x > 0,
/// 0 for x < 0, c0 at exact floating zero.
pub fn heaviside(x: f64, conv: HeavisideConvention) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        conv.c0
    }
}

/// mu_chi(σ) = (1/2 - σ) H(1/2 - σ): equals 1/2 - σ left of the critical
/// line, 0 on and right of it, independent of the H(0) convention.
pub fn mu_chi_closed(sigma: f64, conv: HeavisideConvention) -> f64 {
    let x = 0.5 - sigma;
    x * heaviside(x, conv)
}

/// Residual of the Lindelöf functional equation for the closed form:
/// [mu(σ) - mu(1-σ)] - (1/2 - σ). Identically zero.
pub fn mu_functional_eq_residual(sigma: f64, conv: HeavisideConvention) -> f64 {
    (mu_chi_closed(sigma, conv) - mu_chi_closed(1.0 - sigma, conv)) - (0.5 - sigma)
}

/// The associated mu for chi_k: k-independent, identical to mu_chi.
pub fn mu_k_closed(sigma: f64, k: u32, conv: HeavisideConvention) -> f64 {
    let _ = k; // the closed form does not depend on the modulus
    mu_chi_closed(sigma, conv)
}

/// Which modulus the slope estimator samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SlopeTarget {
    Zeta,
    Chi,
    ChiK(u32),
}

/// Sampling step rule within a window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StepRule {
    /// δ(τ) = min(0.1, π / ln τ): at least ~6 samples per mean zero gap.
    Default,
    Fixed(f64),
}

impl StepRule {
    fn step(&self, tau: f64) -> f64 {
        match self {
            StepRule::Default => (std::f64::consts::PI / tau.max(1.5).ln()).min(0.1),
            StepRule::Fixed(h) => *h,
        }
    }
}

/// Per-σ empirical growth exponent from windowed modulus maxima.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuEstimate {
    pub sigma: f64,
    /// (geometric window midpoint, window maximum modulus), ordered by τ.
    pub window_maxima: Vec<(f64, f64)>,
    pub slope: f64,
    pub residual_rms: f64,
}

/// Estimate the growth exponent of |target(σ+iτ)| over [tau_min, tau_max].
///
/// The range is split into `windows` geometric windows; the modulus is
/// sampled at the step rule inside each; the slope is the least-squares fit
/// of log max against log of the window midpoint. For the chi target the
/// slope estimates 1/2 - σ; for zeta it estimates mu_zeta(σ) from below.
pub fn estimate_mu_slope(
    target: SlopeTarget,
    sigma: f64,
    tau_min: f64,
    tau_max: f64,
    windows: usize,
    step_rule: StepRule,
) -> Result<MuEstimate> {
    if !(1.0 <= tau_min && tau_min < tau_max && tau_max <= 1e4) {
        return Err(Error::Range(format!(
            "tau range [{tau_min}, {tau_max}] outside 1 <= tau_min < tau_max <= 1e4"
        )));
    }
    if windows < 4 {
        return Err(Error::Fit(format!("{windows} windows < 4")));
    }

    let ratio = (tau_max / tau_min).powf(1.0 / windows as f64);
    let mut samples: Vec<(usize, f64)> = Vec::new();
    let mut mids = Vec::with_capacity(windows);
    for w in 0..windows {
        let lo = tau_min * ratio.powi(w as i32);
        let hi = tau_min * ratio.powi(w as i32 + 1);
        mids.push((lo * hi).sqrt());
        let mut tau = lo;
        while tau < hi {
            samples.push((w, tau));
            tau += step_rule.step(tau);
        }
        samples.push((w, hi));
    }

    let cfg = ZetaConfig::default();
    let moduli: Vec<(usize, f64)> = samples
        .par_iter()
        .map(|&(w, tau)| {
            let s = Complex64::new(sigma, tau);
            let m = match target {
                SlopeTarget::Zeta => zetafn::zeta(s, &cfg).map(|e| e.modulus()),
                SlopeTarget::Chi => chifn::chi(s).map(|e| e.modulus()),
                SlopeTarget::ChiK(k) => chifn::chi_k(s, k).map(|e| e.modulus()),
            };
            (w, m.unwrap_or(f64::NAN))
        })
        .collect();

    let mut maxima = vec![f64::NEG_INFINITY; windows];
    for (w, m) in moduli {
        if m.is_finite() {
            maxima[w] = maxima[w].max(m);
        }
    }
    let window_maxima: Vec<(f64, f64)> = mids
        .iter()
        .zip(maxima.iter())
        .filter(|(_, &m)| m.is_finite() && m > 0.0)
        .map(|(&mid, &m)| (mid, m))
        .collect();
    if window_maxima.len() < 4 {
        return Err(Error::Fit(format!(
            "only {} usable windows (need >= 4)",
            window_maxima.len()
        )));
    }

    let (slope, residual_rms) = log_log_fit(&window_maxima);
    Ok(MuEstimate {
        sigma,
        window_maxima,
        slope,
        residual_rms,
    })
}

fn log_log_fit(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    (slope, (ss / n).sqrt())
}

/// The normalized mean value (1/T) ∫_1^T |ζ(1/2+it)|^{2k} dt.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentResult {
    pub k: u32,
    #[serde(rename = "T")]
    pub t_end: f64,
    pub normalized_moment: f64,
    pub quadrature_err: f64,
}

/// Composite-Simpson moment integral for k = 1 or 2, 10 <= T <= 5000.
///
/// `quadrature_err` combines the step-halving (Richardson) estimate with the
/// propagated zeta error budget.
pub fn moment_integral(k: u32, t_end: f64, quad_step: f64) -> Result<MomentResult> {
    if !(k == 1 || k == 2) {
        return Err(Error::Domain(format!("k = {k}: only k = 1, 2 supported")));
    }
    if !(10.0..=5000.0).contains(&t_end) {
        return Err(Error::Range(format!("T = {t_end} outside [10, 5000]")));
    }
    if !(quad_step > 0.0 && quad_step <= 0.05) {
        return Err(Error::Range(format!(
            "quad_step = {quad_step} outside (0, 0.05]"
        )));
    }

    let span = t_end - 1.0;
    let mut n = (span / quad_step).ceil() as usize;
    n = n.div_ceil(4) * 4; // fine and coarse Simpson both need even counts
    let h = span / n as f64;

    let cfg = ZetaConfig::default();
    let evals: Vec<(f64, f64)> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let t = 1.0 + i as f64 * h;
            match zetafn::zeta_em(Complex64::new(0.5, t), &cfg) {
                Ok(e) => {
                    let m = e.modulus();
                    let f = m.powi(2 * k as i32);
                    let df = 2.0 * k as f64 * m.powi(2 * k as i32 - 1) * e.abs_err;
                    (f, df)
                }
                Err(_) => (f64::NAN, f64::NAN),
            }
        })
        .collect();
    if evals.iter().any(|(f, _)| !f.is_finite()) {
        return Err(Error::Range(
            "zeta evaluation failed inside the moment range".into(),
        ));
    }

    let simpson = |stride: usize| -> f64 {
        let hh = h * stride as f64;
        let m = n / stride;
        let mut sum = evals[0].0 + evals[n].0;
        for j in 1..m {
            let w = if j % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * evals[j * stride].0;
        }
        sum * hh / 3.0
    };
    let fine = simpson(1);
    let coarse = simpson(2);
    let disagreement = (fine - coarse).abs();
    if disagreement > 0.01 * fine.abs() {
        return Err(Error::Quadrature(disagreement / fine.abs()));
    }

    let zeta_budget: f64 = evals.iter().map(|(_, df)| df).sum::<f64>() * h;
    let quadrature_err = (disagreement / 15.0 + zeta_budget) / t_end;
    Ok(MomentResult {
        k,
        t_end,
        normalized_moment: fine / t_end,
        quadrature_err,
    })
}
