//! Double-double (~31 significant digits) arithmetic for the independent
//! high-precision oracles. Only what the oracles need: basic ops, sqrt,
//! exp, ln, sin/cos, atan2, and a complex layer with ln.

// split constants carry full double-double precision
#![allow(clippy::approx_constant)]
#![allow(clippy::excessive_precision)]

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact ratio of two small integers.
    pub fn ratio(p: i64, q: i64) -> Self {
        Dd::from_f64(p as f64).div(Dd::from_f64(q as f64))
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Self {
        Dd::new(-self.hi, -self.lo)
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn add_f64(self, o: f64) -> Dd {
        self.add(Dd::from_f64(o))
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, o: f64) -> Dd {
        self.mul(Dd::from_f64(o))
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        Dd::from_f64(q1).add_f64(q2).add_f64(q3)
    }

    pub fn sqrt(self) -> Dd {
        debug_assert!(self.hi >= 0.0);
        if self.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        // one Newton step on a double seed doubles the precision
        let y = Dd::from_f64(self.hi.sqrt());
        let y = y.add(self.div(y)).mul_f64(0.5);
        y.add(self.div(y)).mul_f64(0.5)
    }

    pub fn exp(self) -> Dd {
        let n = (self.to_f64() / std::f64::consts::LN_2).round();
        let r = self.sub(LN2.mul_f64(n));
        let mut term = Dd::from_f64(1.0);
        let mut sum = Dd::from_f64(1.0);
        let mut k = 1.0f64;
        loop {
            term = term.mul(r).div(Dd::from_f64(k));
            sum = sum.add(term);
            if term.hi.abs() < 1e-40 * sum.hi.abs() || k > 40.0 {
                break;
            }
            k += 1.0;
        }
        // scale by 2^n
        Dd::new(
            sum.hi * (n as i32 as f64).exp2(),
            sum.lo * (n as i32 as f64).exp2(),
        )
    }

    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        // Newton from the double seed: y <- y + x e^{-y} - 1
        let y = Dd::from_f64(self.hi.ln());
        let e = y.neg().exp();
        let y = y.add(self.mul(e).add_f64(-1.0));
        let e = y.neg().exp();
        y.add(self.mul(e).add_f64(-1.0))
    }

    /// (sin, cos) via reduction mod π/2 and Taylor on |r| <= π/4.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let quota = self.div(HALF_PI).to_f64().round();
        let r = self.sub(HALF_PI.mul_f64(quota));
        let (s, c) = sin_cos_taylor(r);
        match (quota as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    /// atan2(self, x): double seed plus one rotation correction.
    pub fn atan2(self, x: Dd) -> Dd {
        let theta = Dd::from_f64(self.hi.atan2(x.hi));
        let (s, c) = theta.sin_cos();
        // rotate (x, y) by -theta: residual angle = atan(v/u) ~ v/u
        let u = x.mul(c).add(self.mul(s));
        let v = self.mul(c).sub(x.mul(s));
        theta.add(v.div(u))
    }
}

fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
    let r2 = r.mul(r);
    let mut term = r;
    let mut sin = r;
    let mut k = 1.0f64;
    loop {
        term = term.mul(r2).div(Dd::from_f64(-(2.0 * k) * (2.0 * k + 1.0)));
        sin = sin.add(term);
        if term.hi.abs() < 1e-40 || k > 30.0 {
            break;
        }
        k += 1.0;
    }
    let mut term = Dd::from_f64(1.0);
    let mut cos = Dd::from_f64(1.0);
    let mut k = 1.0f64;
    loop {
        term = term.mul(r2).div(Dd::from_f64(-(2.0 * k - 1.0) * (2.0 * k)));
        cos = cos.add(term);
        if term.hi.abs() < 1e-40 || k > 30.0 {
            break;
        }
        k += 1.0;
    }
    (sin, cos)
}

pub const PI: Dd = Dd::new(3.141592653589793116, 1.2246467991473531772e-16);
pub const HALF_PI: Dd = Dd::new(1.570796326794896558, 6.123233995736765886e-17);
pub const LN2: Dd = Dd::new(0.6931471805599453094, 2.3190468138462995584e-17);

/// Complex double-double.
#[derive(Debug, Clone, Copy)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub fn new(re: Dd, im: Dd) -> Self {
        Cdd { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cdd::new(Dd::from_f64(re), Dd::from_f64(im))
    }

    pub fn add(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.add(o.re), self.im.add(o.im))
    }

    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd::new(self.re.sub(o.re), self.im.sub(o.im))
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd::new(
            self.re.mul(o.re).sub(self.im.mul(o.im)),
            self.re.mul(o.im).add(self.im.mul(o.re)),
        )
    }

    pub fn div(self, o: Cdd) -> Cdd {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(Cdd::new(o.re, o.im.neg()));
        Cdd::new(num.re.div(den), num.im.div(den))
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    /// Principal log.
    pub fn ln(self) -> Cdd {
        Cdd::new(self.norm_sqr().ln().mul_f64(0.5), self.im.atan2(self.re))
    }
}

/// B_{2n} / (2n (2n-1)) as exact rationals, n = 1..=15.
fn stirling_coeff(n: usize) -> Dd {
    // (p, q) with B_{2n} = p/q
    const B: [(i64, i64); 15] = [
        (1, 6),
        (-1, 30),
        (1, 42),
        (-1, 30),
        (5, 66),
        (-691, 2730),
        (7, 6),
        (-3617, 510),
        (43867, 798),
        (-174611, 330),
        (854513, 138),
        (-236364091, 2730),
        (8553103, 6),
        (-23749461029, 870),
        (8615841276005, 14322),
    ];
    let (p, q) = B[n - 1];
    let factor = (2 * n as i64) * (2 * n as i64 - 1);
    Dd::ratio(p, q).div(Dd::from_f64(factor as f64))
}

/// log Γ(z) by the Stirling series at a right-shifted argument: the
/// independent oracle. Requires Re z > 0.
pub fn log_gamma_oracle(z: Cdd) -> Cdd {
    assert!(z.re.hi > 0.0, "oracle needs Re z > 0");
    // shift until |z + m| >= 30
    let mut shift_sum = Cdd::from_f64(0.0, 0.0);
    let mut w = z;
    while w.norm_sqr().to_f64() < 900.0 {
        shift_sum = shift_sum.add(w.ln());
        w = w.add(Cdd::from_f64(1.0, 0.0));
    }
    let ln_w = w.ln();
    let half = Cdd::from_f64(0.5, 0.0);
    let mut acc = w.sub(half).mul(ln_w).sub(w);
    let ln_2pi_half = PI.mul_f64(2.0).ln().mul_f64(0.5);
    acc = acc.add(Cdd::new(ln_2pi_half, Dd::from_f64(0.0)));
    let w2_inv = Cdd::from_f64(1.0, 0.0).div(w.mul(w));
    let mut pow = Cdd::from_f64(1.0, 0.0).div(w);
    for n in 1..=15 {
        let c = stirling_coeff(n);
        acc = acc.add(Cdd::new(pow.re.mul(c), pow.im.mul(c)));
        pow = pow.mul(w2_inv);
    }
    acc.sub(shift_sum)
}

/// |Γ(it)| via the closed form sqrt(π / (t sinh(πt))), all in double-double.
pub fn abs_gamma_imag_axis_oracle(t: f64) -> Dd {
    let td = Dd::from_f64(t);
    let pt = PI.mul(td);
    let sinh = pt.exp().sub(pt.neg().exp()).mul_f64(0.5);
    PI.div(td.mul(sinh)).sqrt()
}

/// |chi(it)| via sqrt(t/2π) (1-e^{-πt}) / sqrt(1-e^{-2πt}), double-double.
pub fn abs_chi_imag_axis_oracle(t: f64) -> Dd {
    let td = Dd::from_f64(t);
    let one = Dd::from_f64(1.0);
    let e1 = PI.mul(td).neg().exp();
    let e2 = PI.mul(td).mul_f64(2.0).neg().exp();
    td.div(PI.mul_f64(2.0))
        .sqrt()
        .mul(one.sub(e1))
        .div(one.sub(e2).sqrt())
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn dd_exp_ln_roundtrip() {
        for &x in &[0.1, 1.0, 3.5, 20.0] {
            let d = Dd::from_f64(x);
            let r = d.exp().ln();
            assert!((r.to_f64() - x).abs() < 1e-28 * x.max(1.0));
        }
    }

    #[test]
    fn oracle_reproduces_ln_factorials() {
        // log Γ(11) = ln(10!)
        let v = log_gamma_oracle(Cdd::from_f64(11.0, 0.0));
        let exact = (2..=10).map(|k| f64::from(k).ln()).sum::<f64>();
        assert!((v.re.to_f64() - exact).abs() < 1e-13);
        assert!(v.im.to_f64().abs() < 1e-25);
    }
}
