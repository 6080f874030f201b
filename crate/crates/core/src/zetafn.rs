//! Riemann zeta via Euler-Maclaurin with functional-equation reflection,
//! cross-checked by a Borwein-accelerated alternating (eta) series, plus the
//! Hurwitz zeta that backs the Dirichlet L-functions.

// the Bernoulli table keeps its full published precision
#![allow(clippy::excessive_precision)]

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::chifn;
use crate::error::{Error, Result};
use crate::types::Evaluation;

const LN_2: f64 = std::f64::consts::LN_2;
const PI: f64 = std::f64::consts::PI;

/// Pole guard radius around s = 1.
pub const POLE_RADIUS: f64 = 1e-8;

/// Supported height for the Euler-Maclaurin evaluator.
pub const EM_TAU_MAX: f64 = 2e4;

/// Supported height for the eta evaluator and Hurwitz zeta.
pub const ETA_TAU_MAX: f64 = 1e3;

/// Tuning for the Euler-Maclaurin evaluator.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ZetaConfig {
    /// Multiplier on |τ| for the direct-sum cutoff N.
    pub em_terms_factor: f64,
    /// Number of Bernoulli correction terms (2..=30).
    pub bernoulli_terms: usize,
    /// Requested absolute accuracy; N is doubled once if the first omitted
    /// term exceeds it.
    pub target_abs_err: f64,
}

impl Default for ZetaConfig {
    fn default() -> Self {
        ZetaConfig {
            em_terms_factor: 1.3,
            bernoulli_terms: 8,
            target_abs_err: 1e-13,
        }
    }
}

impl ZetaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_terms_factor.is_nan()
            || self.em_terms_factor <= 0.0
            || !self.em_terms_factor.is_finite()
        {
            return Err(Error::Domain("em_terms_factor must be positive".into()));
        }
        if !(2..=30).contains(&self.bernoulli_terms) {
            return Err(Error::Domain("bernoulli_terms must lie in 2..=30".into()));
        }
        if self.target_abs_err.is_nan() || self.target_abs_err < 1e-13 {
            return Err(Error::Domain("target_abs_err must be >= 1e-13".into()));
        }
        Ok(())
    }
}

/// B_{2k} for k = 1..=31: enough for 30 correction terms plus the first
/// omitted one in the error estimate.
const BERNOULLI_2K: [f64; 31] = [
    0.16666666666666666667,
    -0.033333333333333333333,
    0.023809523809523809524,
    -0.033333333333333333333,
    0.075757575757575757576,
    -0.25311355311355311355,
    1.1666666666666666667,
    -7.0921568627450980392,
    54.971177944862155388,
    -529.12424242424242424,
    6192.1231884057971014,
    -86580.253113553113553,
    1425517.1666666666667,
    -27298231.067816091954,
    601580873.90064236838,
    -15116315767.092156863,
    429614643061.16666667,
    -13711655205088.332772,
    488332318973593.16667,
    -19296579341940068.149,
    841693047573682615.0,
    -4.0338071854059455413e19,
    2.11507486380819916056e21,
    -1.20866265222965259346e23,
    7.500866746076964366856e24,
    -5.038778101481068914138e26,
    3.652877648481812333511e28,
    -2.849876930245088222627e30,
    2.386542749968362764465e32,
    -2.139994925722533366581e34,
    2.050097572347809756992e36,
];

/// B_{2k} / (2k)! for k = 1..=31.
fn bernoulli_over_factorial() -> &'static [f64; 31] {
    static TABLE: OnceLock<[f64; 31]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; 31];
        let mut fact = 1.0f64; // (2k)!
        for (k, slot) in out.iter_mut().enumerate() {
            let two_k = 2.0 * (k as f64 + 1.0);
            fact *= (two_k - 1.0) * two_k;
            *slot = BERNOULLI_2K[k] / fact;
        }
        out
    })
}

/// n^{-s} for n > 0.
#[inline]
fn pow_neg_s(n: f64, s: Complex64) -> Complex64 {
    let ln = n.ln();
    let modulus = (-s.re * ln).exp();
    let (sin, cos) = (-s.im * ln).sin_cos();
    Complex64::new(modulus * cos, modulus * sin)
}

/// Compensated complex accumulator.
#[derive(Default)]
struct KahanC {
    sum: Complex64,
    comp: Complex64,
    magnitude: f64,
}

impl KahanC {
    fn add(&mut self, x: Complex64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
        self.magnitude += x.norm();
    }
}

/// Shared Euler-Maclaurin core for Σ (n + a)^{-s}, n >= 0, a in (0, 1].
///
/// Returns the value and an error estimate dominated by the first omitted
/// Bernoulli correction.
fn euler_maclaurin(s: Complex64, a: f64, n_cut: usize, terms: usize) -> Evaluation {
    let mut acc = KahanC::default();
    for n in 0..n_cut {
        acc.add(pow_neg_s(n as f64 + a, s));
    }
    let base = n_cut as f64 + a;
    let base_pow = pow_neg_s(base, s); // (N+a)^{-s}
    acc.add(base_pow * base / (s - Complex64::new(1.0, 0.0)));
    acc.add(base_pow * 0.5);

    let coeffs = bernoulli_over_factorial();
    let inv_sq = 1.0 / (base * base);
    let mut rising = s; // (s)_{2k-1}
    let mut power = base_pow / base; // (N+a)^{-s-2k+1}
    let mut first_omitted = 0.0;
    for (k, &c) in coeffs.iter().enumerate().take(terms + 1) {
        let term = power * rising * c;
        if k < terms {
            acc.add(term);
        } else {
            first_omitted = term.norm();
        }
        let j = 2.0 * (k as f64 + 1.0);
        rising = rising * (s + Complex64::new(j - 1.0, 0.0)) * (s + Complex64::new(j, 0.0));
        power *= inv_sq;
    }
    let rounding = 2.0 * f64::EPSILON * acc.magnitude;
    Evaluation::new(acc.sum, first_omitted + rounding + 1e-300)
}

/// Euler-Maclaurin ζ(s) on σ >= -1, |τ| <= 2e4, away from s = 1.
pub fn zeta_em(s: Complex64, cfg: &ZetaConfig) -> Result<Evaluation> {
    cfg.validate()?;
    if (s - Complex64::new(1.0, 0.0)).norm() <= POLE_RADIUS {
        return Err(Error::Pole(s));
    }
    if s.re < -1.0 - 1e-12 {
        return Err(Error::Domain(format!(
            "sigma = {} below the supported range [-1, inf)",
            s.re
        )));
    }
    if s.im.abs() > EM_TAU_MAX {
        return Err(Error::Range(format!(
            "|tau| = {} exceeds the supported {EM_TAU_MAX}",
            s.im.abs()
        )));
    }
    let mut n_cut = (cfg.em_terms_factor * s.im.abs()).ceil().max(20.0) as usize;
    let mut result = euler_maclaurin(s, 1.0, n_cut, cfg.bernoulli_terms);
    if result.abs_err > cfg.target_abs_err {
        n_cut *= 2;
        result = euler_maclaurin(s, 1.0, n_cut, cfg.bernoulli_terms);
    }
    Ok(result)
}

/// Borwein-accelerated eta route: ζ(s) = (1 - 2^{1-s})^{-1} Σ (-1)^{n-1} n^{-s}.
///
/// Needs σ > 0 and stays clear of the zeros of 1 - 2^{1-s} off the pole.
pub fn zeta_eta(s: Complex64) -> Result<Evaluation> {
    if (s - Complex64::new(1.0, 0.0)).norm() <= POLE_RADIUS {
        return Err(Error::Pole(s));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "sigma = {} outside the eta half-plane sigma > 0",
            s.re
        )));
    }
    if s.im.abs() > ETA_TAU_MAX {
        return Err(Error::Range(format!(
            "|tau| = {} exceeds the supported {ETA_TAU_MAX}",
            s.im.abs()
        )));
    }
    let eta_factor = Complex64::new(1.0, 0.0) - ((Complex64::new(1.0, 0.0) - s) * LN_2).exp();
    if eta_factor.norm() < 1e-10 {
        return Err(Error::Domain(format!(
            "1 - 2^(1-s) vanishes near s = {s}: eta route undefined"
        )));
    }

    let n = (0.9 * s.im.abs()).ceil() as usize + 25;
    // Chebyshev weights d_k via scaled partial sums of
    // t_j = (n+j-1)! 4^j / ((n-j)! (2j)!), accumulated in log space.
    let mut log_t = Vec::with_capacity(n + 1);
    let mut lt = -(n as f64).ln();
    log_t.push(lt);
    for j in 0..n {
        let jf = j as f64;
        let nf = n as f64;
        lt += (4.0 * (nf + jf) * (nf - jf)).ln() - ((2.0 * jf + 1.0) * (2.0 * jf + 2.0)).ln();
        log_t.push(lt);
    }
    let peak = log_t.iter().cloned().fold(f64::MIN, f64::max);
    let mut prefix = Vec::with_capacity(n + 1);
    let mut running = 0.0f64;
    let mut comp = 0.0f64;
    for &l in &log_t {
        let x = (l - peak).exp();
        let y = x - comp;
        let t = running + y;
        comp = (t - running) - y;
        running = t;
        prefix.push(running);
    }
    let total = running;

    let mut acc = KahanC::default();
    for (k, partial) in prefix.iter().enumerate().take(n) {
        let weight = (total - partial) / total;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(pow_neg_s(k as f64 + 1.0, s) * (sign * weight));
    }
    let value = acc.sum / eta_factor;

    // Borwein's bound, inflated by 2^{1-2σ} left of the critical line.
    let log_bound = 3.0f64.ln() - (n as f64) * (3.0 + 8.0f64.sqrt()).ln()
        + 0.5 * PI * s.im.abs()
        + (1.0 + 2.0 * s.im.abs()).ln()
        - eta_factor.norm().ln()
        + (1.0 - 2.0 * s.re).max(0.0) * LN_2;
    let abs_err = log_bound.min(300.0).exp() + 4.0 * f64::EPSILON * acc.magnitude + 1e-300;
    Ok(Evaluation::new(value, abs_err))
}

/// ζ(s) everywhere off s = 1: Euler-Maclaurin for σ >= 1/2, and the exact
/// reflection ζ(s) = chi(s) ζ(1-s) below the critical line, which sidesteps
/// the cancellation of the direct sum where chi grows.
pub fn zeta(s: Complex64, cfg: &ZetaConfig) -> Result<Evaluation> {
    if (s - Complex64::new(1.0, 0.0)).norm() <= POLE_RADIUS {
        return Err(Error::Pole(s));
    }
    if s.re >= 0.5 {
        return zeta_em(s, cfg);
    }
    if s.norm() <= POLE_RADIUS {
        // the reflected argument sits on the pole; the product limit is
        // regular: ζ(s) = -1/2 - (ln 2π / 2) s + O(s²)
        let value = Complex64::new(-0.5, 0.0) - s * (0.5 * (2.0 * PI).ln());
        return Ok(Evaluation::new(value, 1e-15 + s.norm() * s.norm()));
    }
    let reflected = zeta_em(Complex64::new(1.0, 0.0) - s, cfg)?;
    let chi = chifn::chi(s)?;
    let value = chi.value * reflected.value;
    let abs_err = chi.modulus() * reflected.abs_err
        + chi.abs_err * reflected.modulus()
        + chi.abs_err * reflected.abs_err
        + 1e-300;
    Ok(Evaluation::new(value, abs_err))
}

/// Hurwitz ζ(s, a) = Σ_{n>=0} (n+a)^{-s} for a in (0, 1], σ > -1, |τ| <= 1e3.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Evaluation> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("a = {a} outside (0, 1]")));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() <= POLE_RADIUS {
        return Err(Error::Pole(s));
    }
    if s.re <= -1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "sigma = {} outside the supported sigma > -1",
            s.re
        )));
    }
    if s.im.abs() > ETA_TAU_MAX {
        return Err(Error::Range(format!(
            "|tau| = {} exceeds the supported {ETA_TAU_MAX}",
            s.im.abs()
        )));
    }
    let cfg = ZetaConfig::default();
    let mut n_cut = (cfg.em_terms_factor * s.im.abs()).ceil().max(20.0) as usize;
    let mut result = euler_maclaurin(s, a, n_cut, cfg.bernoulli_terms);
    if result.abs_err > cfg.target_abs_err {
        n_cut *= 2;
        result = euler_maclaurin(s, a, n_cut, cfg.bernoulli_terms);
    }
    Ok(result)
}
