//! Real-valued trigonometric data on the circle, stored as complex modes
//! `c_n`, `|n| ≤ N`, with `c_{−n} = conj(c_n)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierModes {
    max_mode: usize,
    /// `coeffs[n + max_mode]` multiplies `e^{inθ}`.
    coeffs: Vec<Complex64>,
}

impl FourierModes {
    /// Builds from the non-negative modes `c_0, …, c_N`; negative modes are
    /// the conjugates, so the represented function is real.
    pub fn from_nonnegative(modes: &[Complex64]) -> Self {
        let max_mode = modes.len().saturating_sub(1);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * max_mode + 1];
        for (n, c) in modes.iter().enumerate() {
            if n == 0 {
                coeffs[max_mode] = Complex64::new(c.re, 0.0);
            } else {
                coeffs[max_mode + n] = *c;
                coeffs[max_mode - n] = c.conj();
            }
        }
        Self { max_mode, coeffs }
    }

    /// `a₀ + Σ aₙ cos nθ + bₙ sin nθ`.
    pub fn from_trig(a0: f64, cos: &[f64], sin: &[f64]) -> Self {
        let n = cos.len().max(sin.len());
        let mut modes = vec![Complex64::new(a0, 0.0)];
        for k in 0..n {
            let a = cos.get(k).copied().unwrap_or(0.0);
            let b = sin.get(k).copied().unwrap_or(0.0);
            modes.push(Complex64::new(0.5 * a, -0.5 * b));
        }
        Self::from_nonnegative(&modes)
    }

    pub fn constant(c: f64) -> Self {
        Self::from_nonnegative(&[Complex64::new(c, 0.0)])
    }

    pub fn cos_mode(n: usize) -> Self {
        let mut cos = vec![0.0; n];
        if n == 0 {
            return Self::constant(1.0);
        }
        cos[n - 1] = 1.0;
        Self::from_trig(0.0, &cos, &[])
    }

    pub fn sin_mode(n: usize) -> Self {
        let mut sin = vec![0.0; n.max(1)];
        if n == 0 {
            return Self::constant(0.0);
        }
        sin[n - 1] = 1.0;
        Self::from_trig(0.0, &[], &sin)
    }

    /// Modes of the trigonometric interpolant through `M` uniform samples
    /// `θ_k = 2πk/M`, with `N = M/2`. An even-`M` Nyquist term is split
    /// evenly between `±N`.
    pub fn from_samples(values: &[f64]) -> Self {
        let m = values.len();
        assert!(m > 0, "at least one sample is required");
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_forward(m).process(&mut buf);
        let scale = 1.0 / m as f64;
        let max_mode = m / 2;
        let mut modes: Vec<Complex64> = (0..=max_mode).map(|n| buf[n] * scale).collect();
        if m.is_multiple_of(2) && max_mode > 0 {
            modes[max_mode] = Complex64::new(0.5 * modes[max_mode].re, 0.0);
        }
        Self::from_nonnegative(&modes)
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.max_mode {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(n + self.max_mode as i64) as usize]
        }
    }

    /// Value of the harmonic extension `Σ c_n ρ^{|n|} e^{inθ}` at polar
    /// position `(ρ, θ)`; `ρ = 1` gives the boundary value.
    pub fn harmonic_eval(&self, rho: f64, theta: f64) -> f64 {
        let mut acc = self.coeffs[self.max_mode].re;
        let step = Complex64::from_polar(rho, theta);
        let mut pow = Complex64::new(1.0, 0.0);
        for n in 1..=self.max_mode {
            pow *= step;
            acc += 2.0 * (self.coeffs[self.max_mode + n] * pow).re;
        }
        acc
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.harmonic_eval(1.0, theta)
    }

    /// Multiplies mode `n` by `|n|`.
    pub fn abs_n_multiplier(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * (i as f64 - self.max_mode as f64).abs())
            .collect();
        Self {
            max_mode: self.max_mode,
            coeffs,
        }
    }

    pub fn to_samples(&self, m: usize) -> Vec<f64> {
        (0..m)
            .map(|k| self.eval(2.0 * PI * k as f64 / m as f64))
            .collect()
    }

    /// True when only the constant mode is (numerically) present.
    pub fn constant_value(&self) -> Option<f64> {
        let c0 = self.coeffs[self.max_mode].re;
        let rest: f64 = (1..=self.max_mode)
            .map(|n| self.coeffs[self.max_mode + n].norm())
            .sum();
        (rest <= 1e-15 * (1.0 + c0.abs())).then_some(c0)
    }

    /// `sup_θ |f(θ)|`: dense sampling followed by golden-section refinement
    /// around the best sample.
    pub fn sup_norm(&self) -> f64 {
        if let Some(c) = self.constant_value() {
            return c.abs();
        }
        let samples = 64 * (self.max_mode + 1);
        let h = 2.0 * PI / samples as f64;
        let (mut best_t, mut best) = (0.0, 0.0f64);
        for k in 0..samples {
            let t = k as f64 * h;
            let v = self.eval(t).abs();
            if v > best {
                best = v;
                best_t = t;
            }
        }
        let g = |t: f64| -self.eval(t).abs();
        let (mut a, mut b) = (best_t - h, best_t + h);
        let ratio = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..80 {
            let c = b - ratio * (b - a);
            let d = a + ratio * (b - a);
            if g(c) < g(d) {
                b = d;
            } else {
                a = c;
            }
        }
        best.max(self.eval(0.5 * (a + b)).abs())
    }
}
