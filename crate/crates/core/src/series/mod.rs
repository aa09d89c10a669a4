//! The integral operator `Tφ(z) = ∫_D φ u g_z dA` and the Neumann-series
//! solutions built from it: `φ_ε = Σ εⁿ Tⁿ φ₀` for the Dirichlet problem of
//! `Δ − εu`, and `g*_w = Σ εⁿ Tⁿ g_w` for its Green function.
//!
//! Two engines compute the terms. The radial engine keeps every term as an
//! exact [`RadialPolynomial`]; the quadrature engine samples each term on a
//! spectral [`PolarGrid`] and applies `T` by singular quadrature at the grid
//! nodes. Interpolation and quadrature errors are reported separately in
//! [`SeriesSolution::numerical_error`]; the certificate covers truncation only.

mod data;
mod radial;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::domain::{Disk, DomainSpec, Ellipse, Point};
use crate::error::{Error, Result};
use crate::error_bounds::{
    dirichlet_remainder_bound, disk_dirichlet_remainder_bound_on, green_remainder_bound,
    BoundCertificate,
};
use crate::fourier::FourierModes;
use crate::greens::{
    ellipse_green_area_integral, green_l2_norm, green_product_integral_disk, green_unit,
    poisson_unit,
};
use crate::grid::PolarGrid;
use crate::quad::{integrate_circle, integrate_domain, Integrand};

pub use data::{AngleFn, BoundaryData, PointFn, Potential};
pub use radial::RadialPolynomial;

pub type TermFn = Arc<dyn Fn(Point) -> Result<f64> + Send + Sync>;

/// How the terms of a Dirichlet series are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Radial,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSettings {
    /// Tolerance of every quadrature that builds a term.
    pub tol: f64,
    pub n_radial: usize,
    /// Angular nodes per ring; raised automatically to resolve the data.
    pub n_theta: usize,
}

impl Default for SeriesSettings {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            n_radial: 17,
            n_theta: 16,
        }
    }
}

/// One term `Tᵏφ₀` (or `Tᵏg_w`), without its `εᵏ` factor.
#[derive(Clone)]
pub enum Term {
    Constant(f64),
    /// Polynomial in `|z|`, radial about the origin.
    Radial(RadialPolynomial),
    /// Harmonic extension of Fourier data into a disk.
    Harmonic {
        disk: Disk,
        modes: FourierModes,
    },
    /// Poisson integral of sampled boundary data.
    PoissonIntegral {
        disk: Disk,
        data: BoundaryData,
    },
    /// `scale · ∫_E g_z dA`.
    EllipseArea {
        ellipse: Ellipse,
        scale: f64,
    },
    /// `g_w(z)`.
    Green {
        disk: Disk,
        pole: Point,
    },
    /// `scale · ∫_D g_z g_w dA`.
    GreenProduct {
        disk: Disk,
        pole: Point,
        scale: f64,
    },
    Grid(Arc<PolarGrid>),
    Quadrature(TermFn),
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Constant(c) => write!(f, "Constant({c})"),
            Term::Radial(p) => write!(f, "Radial({:?})", p.coeffs()),
            Term::Harmonic { modes, .. } => write!(f, "Harmonic(N = {})", modes.max_mode()),
            Term::PoissonIntegral { .. } => write!(f, "PoissonIntegral"),
            Term::EllipseArea { scale, .. } => write!(f, "EllipseArea(scale = {scale})"),
            Term::Green { pole, .. } => write!(f, "Green(pole = {pole:?})"),
            Term::GreenProduct { scale, .. } => write!(f, "GreenProduct(scale = {scale})"),
            Term::Grid(g) => write!(f, "Grid({:?})", g.shape()),
            Term::Quadrature(_) => write!(f, "Quadrature"),
        }
    }
}

impl Term {
    pub fn eval(&self, z: Point) -> Result<f64> {
        Ok(match self {
            Term::Constant(c) => *c,
            Term::Radial(p) => p.eval(z.norm()),
            Term::Harmonic { disk, modes } => {
                let q = disk.to_unit(z);
                modes.harmonic_eval(q.norm().min(1.0), q.angle())
            }
            Term::PoissonIntegral { disk, data } => harmonic_extension(data, disk, z)?,
            Term::EllipseArea { ellipse, scale } => {
                scale * ellipse_green_area_integral(ellipse, z)?
            }
            Term::Green { disk, pole } => green_unit(disk.to_unit(z), disk.to_unit(*pole)),
            Term::GreenProduct { disk, pole, scale } => {
                scale * green_product_integral_disk(disk, z, *pole)?
            }
            Term::Grid(g) => g.eval(z),
            Term::Quadrature(f) => f(z)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SeriesKind {
    Dirichlet,
    Green { pole: Point },
}

/// A truncated Neumann series with its truncation certificate.
#[derive(Debug, Clone)]
pub struct SeriesSolution {
    pub terms: Vec<Term>,
    pub epsilon: f64,
    pub domain: DomainSpec,
    pub kind: SeriesKind,
    pub certificate: BoundCertificate,
    /// `ε · ‖T‖_bound < 1`; when false the bound proves nothing.
    pub certified: bool,
    /// Interpolation and quadrature error in the computed terms, separate
    /// from the analytic truncation bound.
    pub numerical_error: f64,
}

impl SeriesSolution {
    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn remainder_bound(&self) -> f64 {
        self.certificate.bound_value
    }

    fn check_point(&self, z: Point) -> Result<()> {
        self.domain.require_closed(z)?;
        if let SeriesKind::Green { pole } = self.kind {
            if z == pole {
                return Err(Error::PoleEvaluation);
            }
        }
        Ok(())
    }

    /// `Σₖ εᵏ termₖ(z)` over all terms.
    pub fn evaluate(&self, z: Point) -> Result<f64> {
        self.partial_sum(z, self.terms.len())
    }

    /// Sum of the first `k` terms.
    pub fn partial_sum(&self, z: Point, k: usize) -> Result<f64> {
        self.check_point(z)?;
        let mut acc = 0.0;
        let mut power = 1.0;
        for term in self.terms.iter().take(k) {
            if power != 0.0 {
                acc += power * term.eval(z)?;
            }
            power *= self.epsilon;
        }
        Ok(acc)
    }

    /// The `k`-th term without its `εᵏ` factor.
    pub fn term_value(&self, k: usize, z: Point) -> Result<f64> {
        self.check_point(z)?;
        self.terms
            .get(k)
            .ok_or_else(|| Error::InvalidArgument(format!("no term of order {k}")))?
            .eval(z)
    }
}

/// `T` on the unit disk for a radial density `u φ`.
pub fn apply_t_radial(p: &RadialPolynomial) -> RadialPolynomial {
    p.apply_t_unit()
}

/// `T` on the origin-centred disk of the given radius.
pub fn apply_t_radial_disk(p: &RadialPolynomial, radius: f64) -> RadialPolynomial {
    p.apply_t_disk(radius)
}

/// `Tφ(z) = ∫_D φ u g_z dA` by quadrature with `z` declared singular.
pub fn apply_t_quadrature(
    phi: &(dyn Fn(Point) -> f64 + Sync),
    u: &Potential,
    d: &Disk,
    z: Point,
    tol: f64,
) -> Result<f64> {
    let dom = DomainSpec::Disk(*d);
    dom.require_closed(z)?;
    let zu = d.to_unit(z);
    if zu.norm() >= 1.0 {
        return Ok(0.0);
    }
    let f = Integrand::new(move |xi: Point| {
        let g = green_unit(zu, d.to_unit(xi));
        if g == f64::NEG_INFINITY {
            return 0.0;
        }
        phi(xi) * u.eval(xi) * g
    })
    .with_singular_point(z);
    Ok(integrate_domain(&dom, &f, tol)?.value)
}

const HARMONIC_TOL: f64 = 1e-12;

/// The harmonic function in `d` with boundary values `f`, at `z`.
pub fn harmonic_extension(f: &BoundaryData, d: &Disk, z: Point) -> Result<f64> {
    DomainSpec::Disk(*d).require_closed(z)?;
    let q = d.to_unit(z);
    match f {
        BoundaryData::Constant(c) => Ok(*c),
        BoundaryData::Modes(m) => Ok(m.harmonic_eval(q.norm().min(1.0), q.angle())),
        BoundaryData::Sampled { f, .. } => {
            if q.norm() >= 1.0 {
                return Ok(f(q.angle()));
            }
            let r = integrate_circle(
                1.0,
                |t| poisson_unit(Point::polar(1.0, t), q) * f(t),
                HARMONIC_TOL,
            )?;
            Ok(r.value)
        }
    }
}

/// The Dirichlet series with default settings.
pub fn dirichlet_series(
    d: &DomainSpec,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n_terms: usize,
    engine: Engine,
) -> Result<SeriesSolution> {
    dirichlet_series_with(
        d,
        u,
        f,
        epsilon,
        n_terms,
        engine,
        &SeriesSettings::default(),
    )
}

pub fn dirichlet_series_with(
    d: &DomainSpec,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n_terms: usize,
    engine: Engine,
    settings: &SeriesSettings,
) -> Result<SeriesSolution> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "at least one term is required".into(),
        ));
    }
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    u.validate_on(d)?;
    let order = n_terms as u32;
    let (terms, numerical_error, certificate) = match d {
        DomainSpec::Ellipse(e) => {
            let (Some(cu), Some(cf)) = (u.as_constant(), f.as_constant()) else {
                return Err(Error::EngineMismatch(
                    "the ellipse supports only constant potential and boundary data".into(),
                ));
            };
            if n_terms > 2 {
                return Err(Error::EngineMismatch(
                    "the ellipse supports at most two terms".into(),
                ));
            }
            let mut terms = vec![Term::Constant(cf)];
            if n_terms == 2 {
                terms.push(Term::EllipseArea {
                    ellipse: *e,
                    scale: cu * cf,
                });
            }
            (
                terms,
                0.0,
                dirichlet_remainder_bound(d, u, f, epsilon, order)?,
            )
        }
        DomainSpec::Disk(disk) => {
            let (terms, err) = match engine {
                Engine::Radial => (radial_terms(disk, u, f, n_terms)?, 0.0),
                Engine::Quadrature => quadrature_terms(disk, u, f, epsilon, n_terms, settings)?,
            };
            (
                terms,
                err,
                disk_dirichlet_remainder_bound_on(d, u, f, epsilon, order)?,
            )
        }
    };
    Ok(SeriesSolution {
        terms,
        epsilon,
        domain: *d,
        kind: SeriesKind::Dirichlet,
        certified: certificate.is_convergent(),
        certificate,
        numerical_error,
    })
}

fn radial_terms(disk: &Disk, u: &Potential, f: &BoundaryData, n_terms: usize) -> Result<Vec<Term>> {
    if disk.center != Point::ORIGIN {
        return Err(Error::EngineMismatch(
            "the radial engine needs a disk centred at the origin".into(),
        ));
    }
    let up = u.as_radial().ok_or_else(|| {
        Error::EngineMismatch("the radial engine needs a constant or radial potential".into())
    })?;
    let cf = f.as_constant().ok_or_else(|| {
        Error::EngineMismatch("the radial engine needs constant boundary data".into())
    })?;
    let mut current = RadialPolynomial::constant(cf);
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        terms.push(Term::Radial(current.clone()));
        current = up.mul(&current).apply_t_disk(disk.radius);
    }
    Ok(terms)
}

fn base_term(disk: &Disk, f: &BoundaryData) -> Term {
    match f {
        BoundaryData::Constant(c) => Term::Constant(*c),
        BoundaryData::Modes(m) => match m.constant_value() {
            Some(c) => Term::Constant(c),
            None => Term::Harmonic {
                disk: *disk,
                modes: m.clone(),
            },
        },
        BoundaryData::Sampled { .. } => Term::PoissonIntegral {
            disk: *disk,
            data: f.clone(),
        },
    }
}

fn quadrature_terms(
    disk: &Disk,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n_terms: usize,
    settings: &SeriesSettings,
) -> Result<(Vec<Term>, f64)> {
    let mut n_theta = settings.n_theta.max(2);
    let data_modes = match f {
        BoundaryData::Modes(m) => m.max_mode(),
        BoundaryData::Sampled { .. } => 16,
        BoundaryData::Constant(_) => 0,
    };
    while n_theta < 4 * (data_modes + 1) {
        n_theta *= 2;
    }
    let dom = DomainSpec::Disk(*disk);
    // sup_z ∫ u |g_z| dA ≤ ‖u‖∞ R²/4 bounds T on bounded functions.
    let t_inf = u.sup_norm(&dom) * disk.radius * disk.radius / 4.0;

    let mut terms = vec![base_term(disk, f)];
    let mut source: Term = match &terms[0] {
        Term::PoissonIntegral { .. } => {
            let t0 = terms[0].clone();
            Term::Grid(Arc::new(PolarGrid::from_fn(
                *disk,
                settings.n_radial,
                n_theta,
                |p| t0.eval(p),
            )?))
        }
        t => t.clone(),
    };
    let mut err_k = match &source {
        Term::Grid(g) => g.interpolation_error(),
        _ => 0.0,
    };
    let mut total = 0.0;
    let mut power = 1.0;
    for _ in 1..n_terms {
        let src = source.clone();
        let phi = move |p: Point| src.eval(p).unwrap_or(0.0);
        let grid = PolarGrid::from_fn(*disk, settings.n_radial, n_theta, |p| {
            apply_t_quadrature(&phi, u, disk, p, settings.tol)
        })?;
        err_k = t_inf * err_k + settings.tol + grid.interpolation_error();
        power *= epsilon;
        total += power * err_k;
        let term = Term::Grid(Arc::new(grid));
        terms.push(term.clone());
        source = term;
    }
    Ok((terms, total))
}

/// The perturbed Green function series with default settings.
pub fn green_series(
    d: &Disk,
    u: &Potential,
    w: Point,
    epsilon: f64,
    n_terms: usize,
) -> Result<SeriesSolution> {
    green_series_with(d, u, w, epsilon, n_terms, &SeriesSettings::default())
}

pub fn green_series_with(
    d: &Disk,
    u: &Potential,
    w: Point,
    epsilon: f64,
    n_terms: usize,
    settings: &SeriesSettings,
) -> Result<SeriesSolution> {
    let dom = DomainSpec::Disk(*d);
    dom.require_interior(w)?;
    if !(1..=3).contains(&n_terms) {
        return Err(Error::InvalidArgument(format!(
            "the Green series supports 1 to 3 terms, got {n_terms}"
        )));
    }
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    u.validate_on(&dom)?;
    let disk = *d;
    let tol = settings.tol;
    let mut terms = vec![Term::Green { disk, pole: w }];
    let mut numerical_error = 0.0;

    if n_terms >= 2 {
        let first = match u.as_constant() {
            Some(c) => Term::GreenProduct {
                disk,
                pole: w,
                scale: c,
            },
            None => {
                let u = u.clone();
                numerical_error += epsilon * tol;
                let wu = disk.to_unit(w);
                Term::Quadrature(Arc::new(move |z: Point| {
                    green_t_quadrature(&disk, &u, w, z, tol, |xi| {
                        Ok(green_unit(disk.to_unit(xi), wu))
                    })
                }))
            }
        };
        terms.push(first);
    }
    if n_terms == 3 {
        let first = terms[1].clone();
        let u = u.clone();
        let t_inf = u.sup_norm(&dom) * d.radius * d.radius / 4.0;
        numerical_error += epsilon * epsilon * (tol + t_inf * numerical_error.max(tol));
        terms.push(Term::Quadrature(Arc::new(move |z: Point| {
            green_t_quadrature(&disk, &u, w, z, tol, |xi| first.eval(xi))
        })));
    }

    let certificate = green_remainder_bound(&dom, u, epsilon, n_terms as u32)?;
    Ok(SeriesSolution {
        terms,
        epsilon,
        domain: dom,
        kind: SeriesKind::Green { pole: w },
        certified: certificate.is_convergent(),
        certificate,
        numerical_error,
    })
}

/// `∫_D u g_z ψ dA` with both `z` and the pole `w` declared singular.
fn green_t_quadrature(
    disk: &Disk,
    u: &Potential,
    w: Point,
    z: Point,
    tol: f64,
    psi: impl Fn(Point) -> Result<f64> + Sync,
) -> Result<f64> {
    let dom = DomainSpec::Disk(*disk);
    dom.require_closed(z)?;
    let zu = disk.to_unit(z);
    if zu.norm() >= 1.0 {
        return Ok(0.0);
    }
    let f = Integrand::new(|xi: Point| {
        if xi == z || xi == w {
            return 0.0;
        }
        u.eval(xi) * green_unit(zu, disk.to_unit(xi)) * psi(xi).unwrap_or(0.0)
    })
    .with_singular_point(z)
    .with_singular_point(w);
    Ok(integrate_domain(&dom, &f, tol)?.value)
}

/// `‖u‖₂ ‖g_z‖₂ ‖f‖∞`, the first-order sensitivity bound at `z`.
pub fn linearization_bound(u: &Potential, f: &BoundaryData, d: &Disk, z: Point) -> Result<f64> {
    let dom = DomainSpec::Disk(*d);
    dom.require_closed(z)?;
    let sup_f = f.sup_norm();
    if sup_f == 0.0 {
        return Ok(0.0);
    }
    Ok(u.l2_norm(&dom, 1e-10)? * green_l2_norm(d, z)? * sup_f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn unit() -> DomainSpec {
        DomainSpec::unit_disk()
    }

    #[test]
    fn helmholtz_terms_match_closed_forms() {
        let s = dirichlet_series(
            &unit(),
            &Potential::Constant(1.0),
            &BoundaryData::Constant(1.0),
            1.0,
            3,
            Engine::Radial,
        )
        .unwrap();
        assert_abs_diff_eq!(
            s.evaluate(Point::ORIGIN).unwrap(),
            0.796875,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            s.remainder_bound(),
            1.0 / (8.0 * 2f64.sqrt()),
            epsilon = 1e-16
        );
        let z = Point::new(0.3, 0.4);
        let r2 = 0.25;
        let expect = 1.0 - (1.0 - r2) / 4.0 + (r2 * r2 - 4.0 * r2 + 3.0) / 64.0;
        assert_abs_diff_eq!(s.evaluate(z).unwrap(), expect, epsilon = 1e-15);
        assert_abs_diff_eq!(
            s.evaluate(Point::new(0.6, 0.8)).unwrap(),
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn zero_epsilon_is_unperturbed() {
        let s = dirichlet_series(
            &unit(),
            &Potential::Constant(2.0),
            &BoundaryData::Constant(0.7),
            0.0,
            1,
            Engine::Radial,
        )
        .unwrap();
        assert_eq!(s.remainder_bound(), 0.0);
        assert_eq!(s.evaluate(Point::new(0.2, 0.1)).unwrap(), 0.7);
    }

    #[test]
    fn engine_mismatch() {
        let modes = BoundaryData::Modes(FourierModes::cos_mode(1));
        let err = dirichlet_series(
            &unit(),
            &Potential::Constant(1.0),
            &modes,
            1.0,
            2,
            Engine::Radial,
        );
        assert!(matches!(err, Err(Error::EngineMismatch(_))));
        let e: DomainSpec = Ellipse::new(1.0, 1.1).unwrap().into();
        let err = dirichlet_series(
            &e,
            &Potential::Constant(1.0),
            &BoundaryData::Constant(1.0),
            1.0,
            3,
            Engine::Radial,
        );
        assert!(matches!(err, Err(Error::EngineMismatch(_))));
    }

    #[test]
    fn ellipse_first_order() {
        let e: DomainSpec = Ellipse::new(1.0, 1.1).unwrap().into();
        let s = dirichlet_series(
            &e,
            &Potential::Constant(1.0),
            &BoundaryData::Constant(1.0),
            1.0,
            2,
            Engine::Quadrature,
        )
        .unwrap();
        assert_abs_diff_eq!(
            s.term_value(1, Point::ORIGIN).unwrap(),
            -1.21 / 4.42,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(s.remainder_bound(), 0.2992, epsilon = 1e-4);
    }

    #[test]
    fn harmonic_extensions() {
        let d = Disk::unit();
        let cos1 = BoundaryData::Modes(FourierModes::cos_mode(1));
        let z = Point::polar(0.6, 1.1);
        assert_abs_diff_eq!(
            harmonic_extension(&cos1, &d, z).unwrap(),
            0.6 * 1.1f64.cos(),
            epsilon = 1e-14
        );
        let cos2 = BoundaryData::Modes(FourierModes::cos_mode(2));
        assert_abs_diff_eq!(
            harmonic_extension(&cos2, &d, Point::new(0.5, 0.0)).unwrap(),
            0.25,
            epsilon = 1e-14
        );
        let sampled = BoundaryData::sampled(|t| (2.0 * t).cos(), 1.0);
        assert_abs_diff_eq!(
            harmonic_extension(&sampled, &d, Point::new(0.5, 0.0)).unwrap(),
            0.25,
            epsilon = 1e-11
        );
        assert_eq!(
            harmonic_extension(&BoundaryData::Constant(1.0), &d, z).unwrap(),
            1.0
        );
    }

    #[test]
    fn quadrature_t_matches_moments() {
        let d = Disk::unit();
        let one = |_p: Point| 1.0;
        let v =
            apply_t_quadrature(&one, &Potential::Constant(1.0), &d, Point::ORIGIN, 1e-11).unwrap();
        assert_abs_diff_eq!(v, -0.25, epsilon = 1e-10);
        let r2 = Potential::Radial(RadialPolynomial::new(vec![0.0, 1.0]));
        let v = apply_t_quadrature(&one, &r2, &d, Point::ORIGIN, 1e-11).unwrap();
        assert_abs_diff_eq!(v, -1.0 / 16.0, epsilon = 1e-10);
        let zero = |_p: Point| 0.0;
        assert_eq!(
            apply_t_quadrature(
                &zero,
                &Potential::Constant(1.0),
                &d,
                Point::new(0.2, 0.3),
                1e-10
            )
            .unwrap(),
            0.0
        );
    }

    #[test]
    fn green_series_example() {
        let s = green_series(
            &Disk::unit(),
            &Potential::Constant(1.0),
            Point::ORIGIN,
            1.0,
            2,
        )
        .unwrap();
        let z = Point::new(0.5, 0.0);
        let expect = 0.5f64.ln() / (2.0 * PI) + (1.0 - 0.25 * (1.0 - 0.5f64.ln())) / (8.0 * PI);
        assert_abs_diff_eq!(s.evaluate(z).unwrap(), expect, epsilon = 1e-15);
        assert_abs_diff_eq!(
            s.remainder_bound(),
            1.0 / (6.0 * PI * 3f64.sqrt()),
            epsilon = 1e-16
        );
        assert!(matches!(
            s.evaluate(Point::ORIGIN),
            Err(Error::PoleEvaluation)
        ));
        let s0 = green_series(
            &Disk::unit(),
            &Potential::Constant(1.0),
            Point::ORIGIN,
            0.0,
            2,
        )
        .unwrap();
        assert_eq!(s0.evaluate(z).unwrap(), 0.5f64.ln() / (2.0 * PI));
    }

    #[test]
    fn linearization_values() {
        let d = Disk::unit();
        let one = Potential::Constant(1.0);
        let v = linearization_bound(&one, &BoundaryData::Constant(1.0), &d, Point::ORIGIN).unwrap();
        assert_abs_diff_eq!(v, 1.0 / (2.0 * 2f64.sqrt()), epsilon = 1e-12);
        assert_eq!(
            linearization_bound(&one, &BoundaryData::Constant(0.0), &d, Point::ORIGIN).unwrap(),
            0.0
        );
        let edge = linearization_bound(
            &one,
            &BoundaryData::Constant(1.0),
            &d,
            Point::new(0.999999, 0.0),
        )
        .unwrap();
        assert!(edge < 1e-4);
    }
}
