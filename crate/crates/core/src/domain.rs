//! Planar domains: disks and origin-centred, axis-aligned ellipses.
//!
//! Points are identified with complex numbers `z = x + iy`. Every domain is
//! treated as an open set; boundary points are not [`DomainSpec::contains`]ed.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn polar(r: f64, theta: f64) -> Self {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sqr(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !center.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "disk needs a finite centre and positive radius, got radius {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub const fn unit() -> Self {
        Self {
            center: Point::ORIGIN,
            radius: 1.0,
        }
    }

    /// Maps a point of this disk to the unit disk.
    pub fn to_unit(&self, p: Point) -> Point {
        (p - self.center) * (1.0 / self.radius)
    }

    pub fn from_unit(&self, p: Point) -> Point {
        self.center + p * self.radius
    }

    pub fn is_unit(&self) -> bool {
        self.radius == 1.0 && self.center == Point::ORIGIN
    }

    pub fn boundary_point(&self, theta: f64) -> Point {
        self.center + Point::polar(self.radius, theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipse {
    pub semi_axis_a: f64,
    pub semi_axis_b: f64,
}

impl Ellipse {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "ellipse semi-axes must be positive, got ({a}, {b})"
            )));
        }
        Ok(Self {
            semi_axis_a: a,
            semi_axis_b: b,
        })
    }

    /// `x²/a² + y²/b²`; below 1 inside, 1 on the boundary.
    pub fn level(&self, p: Point) -> f64 {
        let (a, b) = (self.semi_axis_a, self.semi_axis_b);
        (p.x / a).powi(2) + (p.y / b).powi(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DomainSpec {
    Disk(Disk),
    Ellipse(Ellipse),
}

impl From<Disk> for DomainSpec {
    fn from(d: Disk) -> Self {
        DomainSpec::Disk(d)
    }
}

impl From<Ellipse> for DomainSpec {
    fn from(e: Ellipse) -> Self {
        DomainSpec::Ellipse(e)
    }
}

impl DomainSpec {
    pub const fn unit_disk() -> Self {
        DomainSpec::Disk(Disk::unit())
    }

    pub fn diameter(&self) -> f64 {
        match self {
            DomainSpec::Disk(d) => 2.0 * d.radius,
            DomainSpec::Ellipse(e) => 2.0 * e.semi_axis_a.max(e.semi_axis_b),
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            DomainSpec::Disk(d) => std::f64::consts::PI * d.radius * d.radius,
            DomainSpec::Ellipse(e) => std::f64::consts::PI * e.semi_axis_a * e.semi_axis_b,
        }
    }

    /// Strict interior test; boundary points are excluded.
    pub fn contains(&self, p: Point) -> bool {
        match self {
            DomainSpec::Disk(d) => (p - d.center).norm_sqr() < d.radius * d.radius,
            DomainSpec::Ellipse(e) => e.level(p) < 1.0,
        }
    }

    /// Interior or boundary, with a small relative slack on the boundary.
    pub fn contains_closed(&self, p: Point) -> bool {
        const SLACK: f64 = 1e-12;
        match self {
            DomainSpec::Disk(d) => (p - d.center).norm() <= d.radius * (1.0 + SLACK),
            DomainSpec::Ellipse(e) => e.level(p) <= 1.0 + SLACK,
        }
    }

    /// Radius of a disk guaranteed to contain the domain, from its diameter alone.
    pub fn jung_radius(&self) -> f64 {
        self.diameter() / 3f64.sqrt()
    }

    /// Exact radius of the smallest enclosing disk.
    pub fn circumradius(&self) -> f64 {
        match self {
            DomainSpec::Disk(d) => d.radius,
            DomainSpec::Ellipse(e) => e.semi_axis_a.max(e.semi_axis_b),
        }
    }

    pub fn centroid(&self) -> Point {
        match self {
            DomainSpec::Disk(d) => d.center,
            DomainSpec::Ellipse(_) => Point::ORIGIN,
        }
    }

    pub fn boundary_point(&self, t: f64) -> Point {
        match self {
            DomainSpec::Disk(d) => d.boundary_point(t),
            DomainSpec::Ellipse(e) => Point::new(e.semi_axis_a * t.cos(), e.semi_axis_b * t.sin()),
        }
    }

    /// Angle of the outward normal at a boundary point.
    pub fn outward_normal_angle(&self, p: Point) -> f64 {
        match self {
            DomainSpec::Disk(d) => (p - d.center).angle(),
            DomainSpec::Ellipse(e) => {
                let (a, b) = (e.semi_axis_a, e.semi_axis_b);
                (p.y / (b * b)).atan2(p.x / (a * a))
            }
        }
    }

    /// Distance from `p` (inside the closed domain) along the unit direction
    /// `(cos θ, sin θ)` to the boundary. Zero when `p` sits on the boundary
    /// and the ray points outwards.
    pub fn ray_exit(&self, p: Point, theta: f64) -> f64 {
        self.ray_exit_dir(p, theta.cos(), theta.sin())
    }

    fn ray_exit_dir(&self, p: Point, ex: f64, ey: f64) -> f64 {
        let (q, ia2, ib2) = match self {
            DomainSpec::Disk(d) => {
                let r2 = 1.0 / (d.radius * d.radius);
                (p - d.center, r2, r2)
            }
            DomainSpec::Ellipse(e) => (
                p,
                1.0 / (e.semi_axis_a * e.semi_axis_a),
                1.0 / (e.semi_axis_b * e.semi_axis_b),
            ),
        };
        // A ρ² + 2 B ρ + C = 0
        let a = ex * ex * ia2 + ey * ey * ib2;
        let b = q.x * ex * ia2 + q.y * ey * ib2;
        let c = (q.x * q.x * ia2 + q.y * q.y * ib2 - 1.0).min(0.0);
        let disc = (b * b - a * c).max(0.0);
        // Stable root choice: for b > 0 the positive root is -c / (b + sqrt).
        let rho = if b > 0.0 {
            -c / (b + disc.sqrt())
        } else {
            (-b + disc.sqrt()) / a
        };
        rho.max(0.0)
    }

    /// Boundary point hit by the axis-aligned ray from `p`; used by the
    /// finite-difference oracle. Returns the arm length.
    pub(crate) fn axis_exit(&self, p: Point, dir: (i32, i32)) -> f64 {
        self.ray_exit_dir(p, dir.0 as f64, dir.1 as f64)
    }

    pub fn as_disk(&self) -> Option<&Disk> {
        match self {
            DomainSpec::Disk(d) => Some(d),
            DomainSpec::Ellipse(_) => None,
        }
    }

    pub(crate) fn require_interior(&self, p: Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotInterior { x: p.x, y: p.y })
        }
    }

    pub(crate) fn require_closed(&self, p: Point) -> Result<()> {
        if self.contains_closed(p) {
            Ok(())
        } else {
            Err(Error::NotInterior { x: p.x, y: p.y })
        }
    }
}
