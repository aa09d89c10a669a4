//! The Dirichlet-to-Neumann map of `Δ − εu` on the unit disk to first order
//! in `ε`: `Λ_{εu} f(ζ) ≈ Λ₀ f(ζ) + ε ∫_𝔻 u P_ζ φ₀ dA`, where `φ₀` is the
//! harmonic extension of `f` and `Λ₀` multiplies mode `n` by `|n|`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::domain::{DomainSpec, Point};
use crate::error::{Error, Result};
use crate::fourier::FourierModes;
use crate::greens::poisson_unit;
use crate::quad::{integrate_domain, integrate_interval, Integrand};
use crate::series::Potential;

/// A real function on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryFunction {
    Modes(FourierModes),
    /// Values at `θ_k = 2πk/M`.
    Sampled(Vec<f64>),
}

impl BoundaryFunction {
    /// Fourier modes; sampled data goes through the uniform transform with
    /// `N = M/2` and any aliasing is the caller's concern.
    pub fn to_modes(&self) -> FourierModes {
        match self {
            BoundaryFunction::Modes(m) => m.clone(),
            BoundaryFunction::Sampled(v) => FourierModes::from_samples(v),
        }
    }

    pub fn to_samples(&self, m: usize) -> Vec<f64> {
        match self {
            BoundaryFunction::Modes(modes) => modes.to_samples(m),
            BoundaryFunction::Sampled(v) if v.len() == m => v.clone(),
            BoundaryFunction::Sampled(v) => FourierModes::from_samples(v).to_samples(m),
        }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            BoundaryFunction::Modes(m) => m.eval(theta),
            BoundaryFunction::Sampled(v) => FourierModes::from_samples(v).eval(theta),
        }
    }
}

/// `Λ₀ f`: mode `n` times `|n|`.
pub fn dtn_base(f: &BoundaryFunction) -> BoundaryFunction {
    BoundaryFunction::Modes(f.to_modes().abs_n_multiplier())
}

/// `∫_𝔻 u P_ζ φ₀ dA`, the coefficient of `ε` in `Λ_{εu} f(ζ)`.
pub fn dtn_correction(u: &Potential, f: &BoundaryFunction, zeta: f64, tol: f64) -> Result<f64> {
    let modes = f.to_modes();
    if modes.max_mode() == 0 && modes.coeff(0).re == 0.0 {
        return Ok(0.0);
    }
    let zp = Point::polar(1.0, zeta);
    let integrand = Integrand::new(|z: Point| {
        let rho = z.norm();
        if rho >= 1.0 {
            return 0.0;
        }
        u.eval(z) * poisson_unit(zp, z) * modes.harmonic_eval(rho, z.angle())
    })
    .with_boundary_point(zp);
    Ok(integrate_domain(&DomainSpec::unit_disk(), &integrand, tol)?.value)
}

/// `∫_𝔻 u P_ξ P_ζ dA` for distinct boundary angles.
pub fn dtn_kernel(u: &Potential, xi: f64, zeta: f64, tol: f64) -> Result<f64> {
    let gap = (xi - zeta).rem_euclid(2.0 * PI);
    if gap.min(2.0 * PI - gap) < 1e-12 {
        return Err(Error::CoincidentPoints);
    }
    let (xp, zp) = (Point::polar(1.0, xi), Point::polar(1.0, zeta));
    let integrand = Integrand::new(|z: Point| {
        if z.norm() >= 1.0 {
            return 0.0;
        }
        u.eval(z) * poisson_unit(xp, z) * poisson_unit(zp, z)
    })
    .with_boundary_point(xp)
    .with_boundary_point(zp);
    Ok(integrate_domain(&DomainSpec::unit_disk(), &integrand, tol)?.value)
}

/// The correction through the kernel, `∮ f(ξ) K(ξ, ζ) ds(ξ)`. The kernel is
/// log-singular at `ξ = ζ`; the substitution `ξ = ζ + 2π(3t² − 2t³)` flattens
/// both ends of the period.
pub fn dtn_correction_by_kernel(
    u: &Potential,
    f: &BoundaryFunction,
    zeta: f64,
    tol: f64,
) -> Result<f64> {
    let modes = f.to_modes();
    let failure = std::sync::Mutex::new(None);
    let inner_tol = tol * 0.1;
    let g = |t: f64| -> f64 {
        if t <= 0.0 || t >= 1.0 {
            return 0.0;
        }
        let xi = zeta + 2.0 * PI * t * t * (3.0 - 2.0 * t);
        let jac = 2.0 * PI * 6.0 * t * (1.0 - t);
        match dtn_kernel(u, xi, zeta, inner_tol) {
            Ok(k) => modes.eval(xi) * k * jac,
            Err(e) => {
                failure.lock().unwrap().get_or_insert(e);
                0.0
            }
        }
    };
    let r = integrate_interval(g, 0.0, 1.0, tol)?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(r.value)
}

/// `Λ₀ f + ε · correction` sampled at `m` uniform angles.
pub fn dtn_apply(
    u: &Potential,
    f: &BoundaryFunction,
    epsilon: f64,
    m: usize,
    tol: f64,
) -> Result<BoundaryFunction> {
    if m == 0 {
        return Err(Error::InvalidArgument("need at least one angle".into()));
    }
    let mut values = dtn_base(f).to_samples(m);
    if epsilon != 0.0 {
        let corrections: Vec<f64> = (0..m)
            .into_par_iter()
            .map(|k| dtn_correction(u, f, 2.0 * PI * k as f64 / m as f64, tol))
            .collect::<Result<_>>()?;
        for (v, c) in values.iter_mut().zip(corrections) {
            *v += epsilon * c;
        }
    }
    Ok(BoundaryFunction::Sampled(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn base_multiplier() {
        let one = BoundaryFunction::Modes(FourierModes::constant(1.0));
        assert!(dtn_base(&one).to_samples(8).iter().all(|v| v.abs() < 1e-15));
        let c3 = BoundaryFunction::Modes(FourierModes::cos_mode(3));
        let out = dtn_base(&c3);
        for t in [0.0, 0.4, 2.0] {
            assert_abs_diff_eq!(out.eval(t), 3.0 * (3.0 * t).cos(), epsilon = 1e-14);
        }
        let sampled = BoundaryFunction::Sampled(FourierModes::sin_mode(1).to_samples(16));
        assert_abs_diff_eq!(dtn_base(&sampled).eval(0.7), 0.7f64.sin(), epsilon = 1e-14);
    }

    #[test]
    fn correction_of_constant_data() {
        let one = Potential::Constant(1.0);
        let f = BoundaryFunction::Modes(FourierModes::constant(1.0));
        for zeta in [0.0, 1.3, 4.0] {
            assert_abs_diff_eq!(
                dtn_correction(&one, &f, zeta, 1e-9).unwrap(),
                0.5,
                epsilon = 1e-8
            );
        }
        let zero = BoundaryFunction::Modes(FourierModes::constant(0.0));
        assert_eq!(dtn_correction(&one, &zero, 0.0, 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn kernel_symmetry_and_errors() {
        let one = Potential::Constant(1.0);
        let a = dtn_kernel(&one, 0.3, 2.1, 1e-9).unwrap();
        let b = dtn_kernel(&one, 2.1, 0.3, 1e-9).unwrap();
        assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        assert!(matches!(
            dtn_kernel(&one, 1.0, 1.0 + 2.0 * PI, 1e-9),
            Err(Error::CoincidentPoints)
        ));
        assert_eq!(
            dtn_kernel(&Potential::Constant(0.0), 0.3, 2.1, 1e-9).unwrap(),
            0.0
        );
    }

    #[test]
    fn apply_at_zero_epsilon_is_base() {
        let f = BoundaryFunction::Modes(FourierModes::cos_mode(2));
        let out = dtn_apply(&Potential::Constant(1.0), &f, 0.0, 16, 1e-9).unwrap();
        assert_eq!(out.to_samples(16), dtn_base(&f).to_samples(16));
    }
}
