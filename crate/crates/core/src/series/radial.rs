use serde::{Deserialize, Serialize};

/// Even polynomial `Σ c_k r^{2k}` in `r = |z|`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RadialPolynomial {
    coeffs: Vec<f64>,
}

impl RadialPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at radius `r`.
    pub fn eval(&self, r: f64) -> f64 {
        self.eval_sq(r * r)
    }

    /// Value as a polynomial in `s = r²`.
    pub fn eval_sq(&self, s: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * s + c)
    }

    pub fn scale(&self, a: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).copied().unwrap_or(0.0)
                        + other.coeffs.get(k).copied().unwrap_or(0.0)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Substitutes `r → λ r`.
    pub fn dilate(&self, lambda: f64) -> Self {
        let l2 = lambda * lambda;
        let mut pow = 1.0;
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let v = c * pow;
                    pow *= l2;
                    v
                })
                .collect(),
        )
    }

    fn derivative_sq(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        )
    }

    /// `(min, max)` of the polynomial for `r ∈ [r_lo, r_hi]`: endpoints plus
    /// the roots of `d/ds`, located by sign changes and bisection.
    pub fn range_on(&self, r_lo: f64, r_hi: f64) -> (f64, f64) {
        let (s_lo, s_hi) = (r_lo * r_lo, r_hi * r_hi);
        let mut candidates = vec![self.eval_sq(s_lo), self.eval_sq(s_hi)];
        let dp = self.derivative_sq();
        if !dp.is_zero() && s_hi > s_lo {
            let samples = 4096;
            let h = (s_hi - s_lo) / samples as f64;
            let mut prev_s = s_lo;
            let mut prev = dp.eval_sq(s_lo);
            for k in 1..=samples {
                let s = s_lo + k as f64 * h;
                let v = dp.eval_sq(s);
                if v == 0.0 {
                    candidates.push(self.eval_sq(s));
                } else if prev != 0.0 && v.signum() != prev.signum() {
                    let (mut a, mut b) = (prev_s, s);
                    for _ in 0..100 {
                        let m = 0.5 * (a + b);
                        if dp.eval_sq(m).signum() == dp.eval_sq(a).signum() {
                            a = m;
                        } else {
                            b = m;
                        }
                    }
                    candidates.push(self.eval_sq(0.5 * (a + b)));
                }
                prev = v;
                prev_s = s;
            }
        }
        candidates
            .into_iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// `T` on the unit disk applied to the radial density `self`:
    /// `c_k r^{2k} ↦ −c_k (1 − r^{2k+2}) / (4(k+1)²)`.
    pub fn apply_t_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = (k + 1) as f64;
            let w = c / (4.0 * m * m);
            out[0] -= w;
            out[k + 1] += w;
        }
        Self::new(out)
    }

    /// `T` on a disk of radius `R` centred at the origin: dilate to the unit
    /// disk, apply, and scale back by `R²` (the Green function is
    /// dilation-invariant, `dA` scales by `R²`).
    pub fn apply_t_disk(&self, radius: f64) -> Self {
        self.dilate(radius)
            .apply_t_unit()
            .dilate(1.0 / radius)
            .scale(radius * radius)
    }
}
