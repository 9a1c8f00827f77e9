//! Airy function `Ai` and its derivative on `[-15, 15]`.
//!
//! Inside `[-SERIES_LEFT, SERIES_RIGHT]` the two Maclaurin solutions `f`, `g`
//! of `y'' = x y` are summed and combined as `Ai = c1 f - c2 g`. The sums
//! cancel heavily (partial sums grow like `exp(zeta)`, `zeta = (2/3)|x|^{3/2}`),
//! so they are carried in double-double arithmetic. Outside that interval the
//! standard asymptotic expansions in `zeta` are used, cut at their smallest
//! term; at the crossovers their truncation error is below `1e-13`.

use std::f64::consts::{FRAC_PI_4, PI};
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// `Ai(0) = 3^{-2/3} / Gamma(2/3)`.
pub const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// `-Ai'(0) = 3^{-1/3} / Gamma(1/3)`.
pub const AI_PRIME_ZERO_NEG: f64 = 0.258_819_403_792_806_8;

// low-order parts of the two constants
const AI_ZERO_LO: f64 = 2.052_336_324_362_12e-17;
const AI_PRIME_ZERO_NEG_LO: f64 = -2.522_243_111_610_832e-17;

pub const AIRY_MIN: f64 = -15.0;
pub const AIRY_MAX: f64 = 15.0;

const SERIES_RIGHT: f64 = 6.0;
const SERIES_LEFT: f64 = 10.0;

fn check_range(x: f64) -> Result<()> {
    if (AIRY_MIN..=AIRY_MAX).contains(&x) {
        Ok(())
    } else {
        Err(Error::Range {
            value: x,
            min: AIRY_MIN,
            max: AIRY_MAX,
        })
    }
}

pub fn airy_ai(x: f64) -> Result<f64> {
    airy_pair(x).map(|(ai, _)| ai)
}

pub fn airy_ai_prime(x: f64) -> Result<f64> {
    airy_pair(x).map(|(_, aip)| aip)
}

/// `(Ai(x), Ai'(x))`.
pub fn airy_pair(x: f64) -> Result<(f64, f64)> {
    check_range(x)?;
    Ok(if x > SERIES_RIGHT {
        asymptotic_positive(x)
    } else if x < -SERIES_LEFT {
        asymptotic_negative(-x)
    } else {
        maclaurin(x)
    })
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd::quick(s, err)
    }

    fn quick(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd::new(s, b - (s - a))
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let prod = Dd::from_f64(q1) * d;
        let r = self - prod;
        let q2 = r.hi / d;
        Dd::quick(q1, q2)
    }

    fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for Dd {
    type Output = Dd;

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let s = Dd::quick(s.hi, s.lo + t.hi);
        Dd::quick(s.hi, s.lo + t.lo)
    }
}

impl Sub for Dd {
    type Output = Dd;

    fn sub(self, o: Dd) -> Dd {
        self + Dd::new(-o.hi, -o.lo)
    }
}

impl Mul for Dd {
    type Output = Dd;

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Dd::quick(p, err + (self.hi * o.lo + self.lo * o.hi))
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;

    fn mul(self, o: f64) -> Dd {
        self * Dd::from_f64(o)
    }
}

fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = Dd::from_f64(x) * x * x;
    // f = sum t_k, g = sum u_k and their derivatives a_k, b_k
    let mut t = Dd::from_f64(1.0);
    let mut u = Dd::from_f64(x);
    let mut a = Dd::from_f64(0.0);
    let mut b = Dd::from_f64(1.0);
    let (mut f, mut g, mut fp, mut gp) = (t, u, a, b);
    for k in 1..400 {
        let k3 = 3.0 * k as f64;
        t = (t * x3).div_f64((k3 - 1.0) * k3);
        u = (u * x3).div_f64(k3 * (k3 + 1.0));
        a = if k == 1 {
            (Dd::from_f64(x) * x).div_f64(2.0)
        } else {
            (a * x3).div_f64((k3 - 3.0) * (k3 - 1.0))
        };
        b = (b * x3).div_f64((k3 - 2.0) * k3);
        f = f + t;
        g = g + u;
        fp = fp + a;
        gp = gp + b;
        let small = |term: Dd, sum: Dd| term.abs_hi() <= 1e-33 * sum.abs_hi().max(1e-300);
        if k > 3 && small(t, f) && small(u, g) && small(a, fp) && small(b, gp) {
            break;
        }
    }
    let c1 = Dd::new(AI_ZERO, AI_ZERO_LO);
    let c2 = Dd::new(AI_PRIME_ZERO_NEG, AI_PRIME_ZERO_NEG_LO);
    ((c1 * f - c2 * g).to_f64(), (c1 * fp - c2 * gp).to_f64())
}

/// Coefficients `u_k`, `v_k` of the asymptotic expansions.
fn coefficients(count: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..count {
        let kf = k as f64;
        let next = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(next);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * next);
    }
    (u, v)
}

/// Sums `sum_k sign^k c_{start + 2k} / zeta^{start + 2k}` (step 2) or every
/// term (step 1), stopping at the smallest term.
fn truncated(coeffs: &[f64], zeta: f64, start: usize, step: usize, alternate: bool) -> f64 {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    for (j, k) in (start..coeffs.len()).step_by(step).enumerate() {
        let term = coeffs[k] / zeta.powi(k as i32);
        if term.abs() > prev {
            break;
        }
        prev = term.abs();
        let sign = if alternate && j % 2 == 1 { -1.0 } else { 1.0 };
        sum += sign * term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn asymptotic_positive(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let (u, v) = coefficients(40);
    let alt = |c: &[f64]| -> Vec<f64> {
        c.iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
            .collect()
    };
    let su = truncated(&alt(&u), zeta, 0, 1, false);
    let sv = truncated(&alt(&v), zeta, 0, 1, false);
    let pre = (-zeta).exp() / (2.0 * PI.sqrt());
    let q = x.powf(0.25);
    (pre / q * su, -pre * q * sv)
}

fn asymptotic_negative(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let (u, v) = coefficients(40);
    let phase = zeta - FRAC_PI_4;
    let (s, c) = phase.sin_cos();
    let u_even = truncated(&u, zeta, 0, 2, true);
    let u_odd = truncated(&u, zeta, 1, 2, true);
    let v_even = truncated(&v, zeta, 0, 2, true);
    let v_odd = truncated(&v, zeta, 1, 2, true);
    let q = z.powf(0.25);
    let root_pi = PI.sqrt();
    (
        (c * u_even + s * u_odd) / (root_pi * q),
        q / root_pi * (s * v_even - c * v_odd),
    )
}
