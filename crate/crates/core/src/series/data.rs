use std::fmt;
use std::sync::Arc;

use crate::domain::{DomainSpec, Point};
use crate::error::{Error, Result};
use crate::fourier::FourierModes;
use crate::quad::{integrate_domain, Integrand};

use super::radial::RadialPolynomial;

pub type PointFn = Arc<dyn Fn(Point) -> f64 + Send + Sync>;
pub type AngleFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// The potential `u ≥ 0` of `Δ − εu`. Radial potentials are radial about the
/// origin.
#[derive(Clone)]
pub enum Potential {
    Constant(f64),
    Radial(RadialPolynomial),
    /// A black-box potential; `sup_norm` is trusted as given and every bound
    /// computed from it is only as honest as that number.
    Sampled {
        f: PointFn,
        sup_norm: f64,
    },
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Potential::Constant(c) => write!(f, "Constant({c})"),
            Potential::Radial(p) => write!(f, "Radial({:?})", p.coeffs()),
            Potential::Sampled { sup_norm, .. } => write!(f, "Sampled {{ sup_norm: {sup_norm} }}"),
        }
    }
}

/// Range of `|z|` over the closed domain.
pub(crate) fn radius_range(d: &DomainSpec) -> (f64, f64) {
    match d {
        DomainSpec::Disk(disk) => {
            let c = disk.center.norm();
            ((c - disk.radius).max(0.0), c + disk.radius)
        }
        DomainSpec::Ellipse(e) => (0.0, e.semi_axis_a.max(e.semi_axis_b)),
    }
}

impl Potential {
    pub fn constant(c: f64) -> Result<Self> {
        if c >= 0.0 && c.is_finite() {
            Ok(Potential::Constant(c))
        } else {
            Err(Error::InvalidArgument(format!(
                "potential must be nonnegative, got {c}"
            )))
        }
    }

    pub fn sampled(f: impl Fn(Point) -> f64 + Send + Sync + 'static, sup_norm: f64) -> Self {
        Potential::Sampled {
            f: Arc::new(f),
            sup_norm,
        }
    }

    pub fn eval(&self, p: Point) -> f64 {
        match self {
            Potential::Constant(c) => *c,
            Potential::Radial(poly) => poly.eval(p.norm()),
            Potential::Sampled { f, .. } => f(p),
        }
    }

    /// `‖u‖∞` over the domain.
    pub fn sup_norm(&self, d: &DomainSpec) -> f64 {
        match self {
            Potential::Constant(c) => c.abs(),
            Potential::Radial(poly) => {
                let (lo, hi) = radius_range(d);
                if poly.coeffs().iter().all(|c| *c >= 0.0) {
                    poly.eval(hi)
                } else {
                    let (mn, mx) = poly.range_on(lo, hi);
                    mn.abs().max(mx.abs())
                }
            }
            Potential::Sampled { sup_norm, .. } => *sup_norm,
        }
    }

    /// Checks `u ≥ 0` on the domain for the closed-form variants.
    pub fn validate_on(&self, d: &DomainSpec) -> Result<()> {
        let min = match self {
            Potential::Constant(c) => *c,
            Potential::Radial(poly) => {
                let (lo, hi) = radius_range(d);
                poly.range_on(lo, hi).0
            }
            Potential::Sampled { sup_norm, .. } => {
                if *sup_norm < 0.0 {
                    *sup_norm
                } else {
                    0.0
                }
            }
        };
        if min < -1e-12 {
            return Err(Error::InvalidArgument(format!(
                "potential takes the negative value {min} on the domain"
            )));
        }
        Ok(())
    }

    /// The potential as a radial polynomial, when it is one.
    pub fn as_radial(&self) -> Option<RadialPolynomial> {
        match self {
            Potential::Constant(c) => Some(RadialPolynomial::constant(*c)),
            Potential::Radial(p) => Some(p.clone()),
            Potential::Sampled { .. } => None,
        }
    }

    pub fn as_constant(&self) -> Option<f64> {
        match self {
            Potential::Constant(c) => Some(*c),
            Potential::Radial(p) => match p.coeffs() {
                [] => Some(0.0),
                [c] => Some(*c),
                _ => None,
            },
            Potential::Sampled { .. } => None,
        }
    }

    /// `‖u‖₂` over the domain.
    pub fn l2_norm(&self, d: &DomainSpec, tol: f64) -> Result<f64> {
        if let Some(c) = self.as_constant() {
            return Ok(c.abs() * d.area().sqrt());
        }
        let f = Integrand::new(|p| self.eval(p).powi(2));
        Ok(integrate_domain(d, &f, tol)?.value.max(0.0).sqrt())
    }
}

/// Dirichlet data `f` on the boundary, as a function of the polar angle
/// about the domain's centre.
#[derive(Clone)]
pub enum BoundaryData {
    Constant(f64),
    Modes(FourierModes),
    Sampled { f: AngleFn, sup_norm: f64 },
}

impl fmt::Debug for BoundaryData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryData::Constant(c) => write!(f, "Constant({c})"),
            BoundaryData::Modes(m) => write!(f, "Modes(N = {})", m.max_mode()),
            BoundaryData::Sampled { sup_norm, .. } => {
                write!(f, "Sampled {{ sup_norm: {sup_norm} }}")
            }
        }
    }
}

impl BoundaryData {
    pub fn sampled(f: impl Fn(f64) -> f64 + Send + Sync + 'static, sup_norm: f64) -> Self {
        BoundaryData::Sampled {
            f: Arc::new(f),
            sup_norm,
        }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            BoundaryData::Constant(c) => *c,
            BoundaryData::Modes(m) => m.eval(theta),
            BoundaryData::Sampled { f, .. } => f(theta),
        }
    }

    pub fn sup_norm(&self) -> f64 {
        match self {
            BoundaryData::Constant(c) => c.abs(),
            BoundaryData::Modes(m) => m.sup_norm(),
            BoundaryData::Sampled { sup_norm, .. } => *sup_norm,
        }
    }

    pub fn as_constant(&self) -> Option<f64> {
        match self {
            BoundaryData::Constant(c) => Some(*c),
            BoundaryData::Modes(m) => m.constant_value(),
            BoundaryData::Sampled { .. } => None,
        }
    }
}
