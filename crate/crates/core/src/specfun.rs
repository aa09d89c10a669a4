//! Modified Bessel functions `I₀`, `I₁` and `K₀` on `[0, 30]`.
//!
//! `I₀` and `I₁` are summed from their power series, whose terms are all
//! positive, so the relative error stays at a few ulps over the whole range.
//! `K₀` uses the logarithmic series below `x = 2` and Steed's continued
//! fraction (Temme's CF2 for order zero) above it.

use crate::error::{Error, Result};

/// Upper end of the supported argument range.
pub const MAX_ARGUMENT: f64 = 30.0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SERIES_SWITCH: f64 = 2.0;

fn check_range(function: &'static str, x: f64, allow_zero: bool) -> Result<()> {
    let low_ok = if allow_zero { x >= 0.0 } else { x > 0.0 };
    if low_ok && x <= MAX_ARGUMENT {
        Ok(())
    } else {
        Err(Error::SpecialFunctionDomain { function, x })
    }
}

/// Σ (x²/4)^k / (k! (k+ν)!) for ν ∈ {0, 1}, without the (x/2)^ν prefactor.
fn positive_series(x: f64, nu: u32) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500u32 {
        term *= q / (k as f64 * (k + nu) as f64);
        sum += term;
        if term < f64::EPSILON * 0.25 * sum {
            break;
        }
    }
    sum
}

pub fn bessel_i0(x: f64) -> Result<f64> {
    check_range("I0", x, true)?;
    Ok(positive_series(x, 0))
}

pub fn bessel_i1(x: f64) -> Result<f64> {
    check_range("I1", x, true)?;
    Ok(0.5 * x * positive_series(x, 1))
}

pub fn bessel_k0(x: f64) -> Result<f64> {
    check_range("K0", x, false)?;
    if x <= SERIES_SWITCH {
        Ok(k0_series(x))
    } else {
        Ok(k0_continued_fraction(x))
    }
}

fn k0_series(x: f64) -> f64 {
    // K₀(x) = −(ln(x/2) + γ) I₀(x) + Σ_{k≥1} (x²/4)^k H_k / (k!)²
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    for k in 1..200u32 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < f64::EPSILON * 0.25 * tail.max(1e-300) {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

fn k0_continued_fraction(x: f64) -> f64 {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000u32 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 0.5 * f64::EPSILON {
            break;
        }
    }
    (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s
}
