//! Gamma evaluators against the independent Stirling oracle and the
//! imaginary-axis closed form.

mod common;

use common::dd::{self, Cdd};
use common::Sampler;
use lindelof_core::gammafn::{abs_gamma_imag_axis, gamma, log_gamma, stirling_abs_bound};
use lindelof_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn log_gamma_matches_oracle_at_3_plus_4i() {
    // frozen value and a live oracle run must agree with each other first
    let oracle = dd::log_gamma_oracle(Cdd::from_f64(3.0, 4.0));
    assert!((oracle.re.to_f64() - common::LOG_GAMMA_3_4I.0).abs() < 1e-15);
    assert!((oracle.im.to_f64() - common::LOG_GAMMA_3_4I.1).abs() < 1e-15);

    let v = log_gamma(c(3.0, 4.0)).unwrap();
    assert!((v.value.re - common::LOG_GAMMA_3_4I.0).abs() < 1e-11);
    assert!((v.value.im - common::LOG_GAMMA_3_4I.1).abs() < 1e-11);
    assert!(v.abs_err < 1e-11);
}

#[test]
fn log_gamma_matches_oracle_on_scattered_points() {
    let mut rng = Sampler::new(7);
    for _ in 0..60 {
        let re = rng.range(0.5, 40.0);
        let im = rng.range(0.0, 40.0);
        let v = log_gamma(c(re, im)).unwrap();
        let o = dd::log_gamma_oracle(Cdd::from_f64(re, im));
        let diff =
            ((v.value.re - o.re.to_f64()).powi(2) + (v.value.im - o.im.to_f64()).powi(2)).sqrt();
        assert!(
            diff < 5e-12 * (1.0 + v.value.norm()),
            "log_gamma({re}+{im}i) off by {diff}"
        );
    }
}

#[test]
fn abs_gamma_imag_axis_frozen_values() {
    // the closed form evaluated in double-double pins the constants
    assert!((dd::abs_gamma_imag_axis_oracle(1.0).to_f64() - common::ABS_GAMMA_I).abs() < 1e-17);
    assert!((dd::abs_gamma_imag_axis_oracle(2.0).to_f64() - common::ABS_GAMMA_2I).abs() < 1e-17);

    let v1 = abs_gamma_imag_axis(1.0).unwrap();
    assert!((v1 - common::ABS_GAMMA_I).abs() < 1e-12);
    let v2 = abs_gamma_imag_axis(2.0).unwrap();
    assert!((v2 - common::ABS_GAMMA_2I).abs() < 1e-12);
}

#[test]
fn closed_form_agrees_with_direct_gamma_modulus() {
    // |gamma(it)| against the closed form, relative 1e-10, t <= 50
    for i in 1..=100 {
        let t = 0.5 * i as f64;
        let closed = abs_gamma_imag_axis(t).unwrap();
        let direct = gamma(c(0.0, t)).unwrap().modulus();
        assert!(
            (closed - direct).abs() <= 1e-10 * direct,
            "t = {t}: closed {closed} vs direct {direct}"
        );
    }
}

#[test]
fn modulus_law_on_the_imaginary_axis() {
    // |gamma(it)|^2 t sinh(pi t) / pi = 1 for t = 0.5, 1, ..., 30
    let pi = std::f64::consts::PI;
    for i in 1..=60 {
        let t = 0.5 * i as f64;
        let m = gamma(c(0.0, t)).unwrap().modulus();
        // sinh in log space to survive t = 30
        let log_sinh = pi * t + (-(-2.0 * pi * t).exp_m1()).ln() - std::f64::consts::LN_2;
        let product = (2.0 * m.ln() + t.ln() + log_sinh - pi.ln()).exp();
        assert!((product - 1.0).abs() < 1e-9, "t = {t}: product {product}");
    }
}

#[test]
fn stirling_bound_majorizes_gamma() {
    // the Stirling-type majorant dominates |Γ(1-s)| at the stated points
    for (re, im) in [(0.0, 10.0), (0.5, 5.0), (0.25, 1.0)] {
        let s = c(re, im);
        let bound = stirling_abs_bound(s).unwrap();
        let direct = gamma(c(1.0 - re, -im)).unwrap().modulus();
        assert!(
            direct <= bound,
            "s = {s}: |Gamma(1-s)| = {direct} above bound {bound}"
        );
    }
    // and across the half-strip with tau >= 1
    let mut rng = Sampler::new(11);
    for _ in 0..200 {
        let s = c(rng.range(0.0, 0.5), rng.range(1.0, 80.0));
        let bound = stirling_abs_bound(s).unwrap();
        let direct = gamma(Complex64::new(1.0, 0.0) - s).unwrap().modulus();
        assert!(direct <= bound * (1.0 + 1e-12), "s = {s}");
    }
}

#[test]
fn conjugate_symmetry() {
    let mut rng = Sampler::new(3);
    let mut checked = 0;
    while checked < 100 {
        let s = c(rng.range(-30.0, 30.0), rng.range(-30.0, 30.0));
        let (a, b) = match (gamma(s.conj()), gamma(s)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue, // pole or overflow: both sides reject together
        };
        let diff = (a.value - b.value.conj()).norm();
        assert!(diff <= 1e-12 * b.value.norm().max(1e-300), "s = {s}");
        checked += 1;
    }
}

#[test]
fn recurrence_gamma_s_plus_one() {
    let mut rng = Sampler::new(5);
    let mut checked = 0;
    while checked < 100 {
        let s = c(rng.range(-20.0, 20.0), rng.range(-20.0, 20.0));
        let (g1, g0) = match (gamma(s + Complex64::new(1.0, 0.0)), gamma(s)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let rel = (g1.value - s * g0.value).norm() / g1.value.norm();
        assert!(rel <= 1e-10, "s = {s}: recurrence residual {rel}");
        checked += 1;
    }
}

#[test]
fn reflection_formula_in_the_strip() {
    let pi = std::f64::consts::PI;
    let mut rng = Sampler::new(9);
    for _ in 0..100 {
        let s = c(rng.range(1e-3, 1.0 - 1e-3), rng.range(-30.0, 30.0));
        let a = gamma(s).unwrap();
        let b = gamma(Complex64::new(1.0, 0.0) - s).unwrap();
        let sin = (s * pi).sin();
        let product = a.value * b.value * sin / pi;
        assert!(
            (product - Complex64::new(1.0, 0.0)).norm() < 1e-9,
            "s = {s}: product {product}"
        );
    }
}

#[test]
fn stirling_bound_chain_weakens_monotonically() {
    // the tightest form exp(1/(6|1-s|)) implies the exp(1/(6 tau0)) and
    // exp(1/6) <= 2 forms for tau >= tau0 >= 1
    let tau0 = 1.0f64;
    let mut rng = Sampler::new(13);
    for _ in 0..200 {
        let s = c(rng.range(0.0, 0.5), rng.range(tau0, 100.0));
        let tight = stirling_abs_bound(s).unwrap();
        let r = (Complex64::new(1.0, 0.0) - s).norm();
        let base = tight / (1.0 / (6.0 * r)).exp();
        let with_tau0 = base * (1.0 / (6.0 * tau0)).exp();
        let with_sixth = base * (1.0f64 / 6.0).exp();
        let with_two = base * 2.0;
        assert!(tight <= with_tau0 * (1.0 + 1e-15));
        assert!(with_tau0 <= with_sixth * (1.0 + 1e-15));
        assert!(with_sixth <= with_two * (1.0 + 1e-15));
    }
}
