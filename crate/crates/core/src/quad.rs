//! Quadrature over disks, ellipses and circles for integrands with
//! logarithmic point singularities.
//!
//! Area integrals are split by a smooth partition of unity
//! `w_i = 1 / (1 + Σ_{k≠i} (d_i/d_k)⁴)`, `d_k = |z − c_k|`, over the declared
//! centres `c_k`. Each piece is integrated in polar coordinates about its own
//! centre, where the log singularity becomes `ρ ln ρ`; the radial variable is
//! further substituted `ρ = ρ_max t²` and both directions use globally
//! adaptive Gauss–Legendre with interval-halving error estimates.
//!
//! Boundary centres (for kernels like the Poisson kernel that blow up like
//! `1/dist` at a boundary point) are integrated over the inward half-plane of
//! directions only.

use std::cell::Cell;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::domain::{DomainSpec, Point};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_EVALUATIONS: usize = 10_000_000;
const GAUSS_ORDER: usize = 10;
const MAX_SEGMENTS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub tol: f64,
    pub max_evaluations: usize,
}

impl QuadOptions {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
        }
    }
}

/// A function on the plane with its declared singular points.
pub struct Integrand<'a> {
    func: Box<dyn Fn(Point) -> f64 + Sync + 'a>,
    singular_points: Vec<Point>,
    boundary_points: Vec<Point>,
}

impl<'a> Integrand<'a> {
    pub fn new(f: impl Fn(Point) -> f64 + Sync + 'a) -> Self {
        Self {
            func: Box::new(f),
            singular_points: Vec::new(),
            boundary_points: Vec::new(),
        }
    }

    /// Declares an interior point where the integrand has a logarithmic singularity.
    pub fn with_singular_point(mut self, p: Point) -> Self {
        self.singular_points.push(p);
        self
    }

    /// Declares a boundary point near which the integrand may grow like `1/dist`.
    pub fn with_boundary_point(mut self, p: Point) -> Self {
        self.boundary_points.push(p);
        self
    }

    pub fn singular_points(&self) -> &[Point] {
        &self.singular_points
    }

    pub fn eval(&self, p: Point) -> f64 {
        (self.func)(p)
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GAUSS_ORDER))
}

struct Budget {
    used: Cell<usize>,
    limit: usize,
}

impl Budget {
    fn new(limit: usize) -> Self {
        Self {
            used: Cell::new(0),
            limit,
        }
    }

    fn charge(&self, n: usize) -> bool {
        self.used.set(self.used.get() + n);
        self.used.get() <= self.limit
    }
}

fn gauss(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = rule();
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    nodes
        .iter()
        .zip(weights)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

struct Segment {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    err: f64,
}

impl Segment {
    fn fine(&self) -> f64 {
        self.left + self.right
    }
}

fn make_segment(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64, coarse: f64) -> Segment {
    let m = 0.5 * (a + b);
    let left = gauss(f, a, m);
    let right = gauss(f, m, b);
    let err = (left + right - coarse).abs();
    Segment {
        a,
        b,
        left,
        right,
        err: if err.is_nan() { f64::INFINITY } else { err },
    }
}

/// Globally adaptive Gauss–Legendre on `[a, b]` with an absolute tolerance.
fn adaptive(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    budget: &Budget,
) -> Result<(f64, f64)> {
    if a == b {
        return Ok((0.0, 0.0));
    }
    let per_segment = 2 * GAUSS_ORDER;
    if !budget.charge(3 * GAUSS_ORDER) {
        return Err(exhausted(f64::INFINITY, tol, budget));
    }
    let coarse = gauss(f, a, b);
    let mut segs = vec![make_segment(f, a, b, coarse)];
    loop {
        let total_err: f64 = segs.iter().map(|s| s.err).sum();
        let magnitude: f64 = segs.iter().map(|s| s.left.abs() + s.right.abs()).sum();
        if total_err <= tol.max(64.0 * f64::EPSILON * magnitude) {
            let value = segs.iter().map(Segment::fine).sum();
            return Ok((value, total_err));
        }
        let (worst, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("non-empty");
        let s = segs.swap_remove(worst);
        let m = 0.5 * (s.a + s.b);
        if (s.b - s.a).abs() <= 1e-13 * (s.a.abs() + s.b.abs()) || segs.len() >= MAX_SEGMENTS {
            return Err(exhausted(total_err, tol, budget));
        }
        if !budget.charge(2 * per_segment) {
            return Err(exhausted(total_err, tol, budget));
        }
        segs.push(make_segment(f, s.a, m, s.left));
        segs.push(make_segment(f, m, s.b, s.right));
    }
}

fn exhausted(estimate: f64, tol: f64, budget: &Budget) -> Error {
    Error::NonConvergence {
        estimate,
        tol,
        evaluations: budget.used.get(),
    }
}

/// One-dimensional adaptive integral of `f` over `[a, b]`. Integrable endpoint
/// singularities are handled by bisection toward them.
pub fn integrate_interval(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    let budget = Budget::new(DEFAULT_MAX_EVALUATIONS);
    let mut g = |x: f64| f(x);
    let (value, err) = adaptive(&mut g, a, b, tol, &budget)?;
    Ok(QuadResult {
        value,
        error_estimate: err,
        evaluations: budget.used.get(),
    })
}

#[derive(Clone, Copy)]
enum Center {
    Interior(Point),
    Boundary(Point),
}

impl Center {
    fn point(self) -> Point {
        match self {
            Center::Interior(p) | Center::Boundary(p) => p,
        }
    }
}

fn partition_weight(z: Point, own: Point, others: &[Point]) -> f64 {
    let di = z.dist(own);
    let mut denom = 1.0;
    for c in others {
        let dk = z.dist(*c);
        if dk == 0.0 {
            return 0.0;
        }
        denom += (di / dk).powi(4);
    }
    1.0 / denom
}

pub fn integrate_domain(d: &DomainSpec, f: &Integrand, tol: f64) -> Result<QuadResult> {
    integrate_domain_with(d, f, &QuadOptions::new(tol))
}

pub fn integrate_domain_with(
    d: &DomainSpec,
    f: &Integrand,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    let mut centers: Vec<Center> = Vec::new();
    let near = |a: Point, b: Point| a.dist(b) <= 1e-14 * (1.0 + a.norm());
    for &p in &f.singular_points {
        if !centers.iter().any(|c| near(c.point(), p)) {
            centers.push(Center::Interior(p));
        }
    }
    for &p in &f.boundary_points {
        if !centers.iter().any(|c| near(c.point(), p)) {
            centers.push(Center::Boundary(p));
        }
    }
    if centers.is_empty() {
        centers.push(Center::Interior(d.centroid()));
    }

    let budget = Budget::new(opts.max_evaluations);
    let piece_tol = opts.tol / centers.len() as f64;
    let mut value = 0.0;
    let mut error = 0.0;
    for (i, center) in centers.iter().enumerate() {
        let own = center.point();
        let others: Vec<Point> = centers
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, c)| c.point())
            .collect();
        let (t0, t1) = match center {
            Center::Interior(_) => (0.0, 2.0 * PI),
            Center::Boundary(p) => {
                let n = d.outward_normal_angle(*p);
                (n + 0.5 * PI, n + 1.5 * PI)
            }
        };
        let inner_tol = 0.5 * piece_tol / (t1 - t0);
        let inner_err = Cell::new(0.0f64);
        let failure: Cell<Option<Error>> = Cell::new(None);

        let mut angular = |theta: f64| -> f64 {
            let rho_max = d.ray_exit(own, theta);
            if rho_max <= 0.0 {
                return 0.0;
            }
            let (c, s) = (theta.cos(), theta.sin());
            let scale = 2.0 * rho_max * rho_max;
            let mut radial = |t: f64| -> f64 {
                let rho = rho_max * t * t;
                let z = Point::new(own.x + rho * c, own.y + rho * s);
                let w = if others.is_empty() {
                    1.0
                } else {
                    partition_weight(z, own, &others)
                };
                if w == 0.0 {
                    return 0.0;
                }
                w * f.eval(z) * scale * t * t * t
            };
            match adaptive(&mut radial, 0.0, 1.0, inner_tol, &budget) {
                Ok((v, e)) => {
                    inner_err.set(inner_err.get().max(e));
                    v
                }
                Err(err) => {
                    let prev = failure.take();
                    failure.set(prev.or(Some(err)));
                    0.0
                }
            }
        };
        let outer = adaptive(&mut angular, t0, t1, 0.5 * piece_tol, &budget);
        if let Some(err) = failure.take() {
            return Err(err);
        }
        let (v, e) = outer?;
        value += v;
        error += e + inner_err.get() * (t1 - t0);
    }
    Ok(QuadResult {
        value,
        error_estimate: error,
        evaluations: budget.used.get(),
    })
}

/// `∮_{|ζ|=radius} f ds` with `f` given as a function of the angle, by the
/// uniform-angle trapezoid rule with doubling.
pub fn integrate_circle(radius: f64, f: impl Fn(f64) -> f64, tol: f64) -> Result<QuadResult> {
    let mut n = 8usize;
    let mut sum: f64 = (0..n).map(|k| f(2.0 * PI * k as f64 / n as f64)).sum();
    let mut evaluations = n;
    let mut prev = sum * 2.0 * PI / n as f64;
    while evaluations < DEFAULT_MAX_EVALUATIONS {
        let added: f64 = (0..n)
            .map(|k| f(2.0 * PI * (2 * k + 1) as f64 / (2 * n) as f64))
            .sum();
        evaluations += n;
        sum += added;
        n *= 2;
        let cur = sum * 2.0 * PI / n as f64;
        let err = (cur - prev).abs() * radius;
        if err <= tol || err <= 16.0 * f64::EPSILON * (cur.abs() * radius) {
            return Ok(QuadResult {
                value: cur * radius,
                error_estimate: err,
                evaluations,
            });
        }
        prev = cur;
    }
    Err(Error::NonConvergence {
        estimate: f64::INFINITY,
        tol,
        evaluations,
    })
}
