//! Shared test support: the high-precision oracles, brute-force series, a
//! deterministic sampler, and reference values frozen from oracle runs.

#![allow(dead_code)]
// frozen oracle values keep their full printed precision
#![allow(clippy::excessive_precision)]

pub mod dd;

use lindelof_core::Complex64;

/// log Γ(3+4i), frozen from a 50-digit run of the Stirling oracle.
pub const LOG_GAMMA_3_4I: (f64, f64) = (-1.7566267846037841105, 4.7426644380346579282);

/// |Γ(i)| and |Γ(2i)| from the closed form at high precision.
pub const ABS_GAMMA_I: f64 = 0.52156404686493984116;
pub const ABS_GAMMA_2I: f64 = 0.076594809395617309989;

/// |chi(i)| from the imaginary-axis closed form at high precision.
pub const ABS_CHI_I: f64 = 0.38205932496109022126;

/// Classical zeta values.
pub const ZETA_2: f64 = 1.6449340668482264365;
pub const ZETA_3: f64 = 1.2020569031595942854;
pub const ZETA_HALF: f64 = -1.4603545088095868129;

/// Hurwitz ζ(2, 1/4); equals π² + 8 Catalan.
pub const HURWITZ_2_QUARTER: f64 = 17.197329154507110739;

/// L₅(2) = 4π²/(25 sqrt 5).
pub const L5_AT_2: f64 = 0.70621140325974096993;

/// Height of the first zero on the critical line.
pub const FIRST_ZERO_T: f64 = 14.134725141734693790;

/// Deterministic sampler for randomized property sweeps.
pub struct Sampler(u64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// ζ(s) by the Cohen-Villegas-Zagier alternating-series acceleration: the
/// eta-series oracle, a different algorithm from the library's evaluators.
pub fn zeta_alternating_oracle(s: Complex64, n: usize) -> Complex64 {
    let sqrt8 = 8.0f64.sqrt();
    let d = ((3.0 + sqrt8).powi(n as i32) + (3.0 - sqrt8).powi(n as i32)) / 2.0;
    let mut b = -1.0f64;
    let mut c = -d;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        sum += pow_neg(kf + 1.0, s) * c;
        b *= (kf + n as f64) * (kf - n as f64) / ((kf + 0.5) * (kf + 1.0));
    }
    let eta_factor =
        Complex64::new(1.0, 0.0) - ((Complex64::new(1.0, 0.0) - s) * std::f64::consts::LN_2).exp();
    sum / d / eta_factor
}

/// Brute-force Hurwitz ζ(s, a) for real s > 1: a compensated reversed sum of
/// `terms` leading terms plus the tail corrections of the integral form.
pub fn hurwitz_brute_force(s: f64, a: f64, terms: usize) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for n in (0..terms).rev() {
        let x = (n as f64 + a).powf(-s);
        let y = x - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let edge = terms as f64 + a;
    // integral tail plus the leading boundary corrections
    sum + edge.powf(1.0 - s) / (s - 1.0) + 0.5 * edge.powf(-s) + s * edge.powf(-s - 1.0) / 12.0
}

/// Brute-force L(2) for the quadratic character mod 5, reversed compensated
/// sum; the neglected tail is below 1e-11 by the bounded partial sums of
/// the character.
pub fn l5_brute_force(terms: usize) -> f64 {
    const CHI5: [f64; 5] = [0.0, 1.0, -1.0, -1.0, 1.0];
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for n in (1..=terms).rev() {
        let x = CHI5[n % 5] / (n as f64 * n as f64);
        let y = x - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

fn pow_neg(base: f64, s: Complex64) -> Complex64 {
    let ln = base.ln();
    let m = (-s.re * ln).exp();
    let (sin, cos) = (-s.im * ln).sin_cos();
    Complex64::new(m * cos, m * sin)
}
