//! Closed-form Green functions of the Laplacian on disks, Poisson kernels,
//! and the exactly integrable Green-function integrals.
//!
//! Sign convention: `Δg_w = δ_w`, `g_w = 0` on the boundary, so `g ≤ 0` inside.
//! General disks are handled by pulling back to the unit disk; the logarithmic
//! Green function is invariant under that affine map.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::domain::{Disk, DomainSpec, Ellipse, Point};
use crate::error::{Error, Result};

/// Green function of the unit disk without argument checks. Returns `-∞` at
/// coincident points and `0` on the boundary.
pub fn green_unit(z: Point, xi: Point) -> f64 {
    let num = xi.dist(z);
    if num == 0.0 {
        return f64::NEG_INFINITY;
    }
    let zc = z.to_complex().conj();
    let den = (Complex64::new(1.0, 0.0) - zc * xi.to_complex()).norm();
    (num / den).ln() / (2.0 * PI)
}

/// Green function `g_z(ξ)` of the disk `d`.
pub fn green_disk(d: &Disk, z: Point, xi: Point) -> Result<f64> {
    let dom = DomainSpec::Disk(*d);
    dom.require_closed(z)?;
    dom.require_closed(xi)?;
    if z == xi {
        return Err(Error::CoincidentPoints);
    }
    Ok(green_unit(d.to_unit(z), d.to_unit(xi)).min(0.0))
}

/// Poisson kernel of the unit disk, `(1 − |z|²) / (2π |ζ − z|²)`, unchecked.
pub fn poisson_unit(zeta: Point, z: Point) -> f64 {
    let gap = (zeta - z).norm_sqr();
    (1.0 - z.norm_sqr()).max(0.0) / (2.0 * PI * gap)
}

/// Poisson kernel `P_ζ(z) = ∂_n g_z(ζ)` of the disk `d`.
pub fn poisson_kernel_disk(d: &Disk, boundary_point: Point, z: Point) -> Result<f64> {
    let zeta = d.to_unit(boundary_point);
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::NotOnBoundary {
            x: boundary_point.x,
            y: boundary_point.y,
        });
    }
    DomainSpec::Disk(*d).require_interior(z)?;
    Ok(poisson_unit(zeta, d.to_unit(z)) / d.radius)
}

/// `∫_𝔻 |ξ|^{2n} g_z(ξ) dA(ξ) = −(1 − |z|^{2n+2}) / (4(n+1)²)`.
pub fn green_moment(n: u32, z: Point) -> Result<f64> {
    DomainSpec::unit_disk().require_closed(z)?;
    let m = (n + 1) as f64;
    let r2 = z.norm_sqr().min(1.0);
    Ok(-(1.0 - r2.powi(n as i32 + 1)) / (4.0 * m * m))
}

/// `log(1 − q) / q`, analytic at `q = 0`.
fn log1m_over(q: Complex64) -> Complex64 {
    if q.norm() < 1e-3 {
        // −Σ q^k / (k+1)
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for k in 0..14 {
            acc -= pow / (k as f64 + 1.0);
            pow *= q;
        }
        acc
    } else {
        (Complex64::new(1.0, 0.0) - q).ln() / q
    }
}

/// `∫_𝔻 g_z g_w dA` on the unit disk, unchecked.
///
/// With `q = z w̄` and `s = |z|² + |w|²` the closed form is
///
/// ```text
/// 8π I = |z−w|² ln|z−w| − s ln|1−q| + Re[q log(1−q)] + (s − 1) Re[log(1−q)/q]
/// ```
///
/// which is symmetric, continuous on the diagonal, and reduces to
/// `(1 − |z|²(1 − ln|z|)) / 8π` when `w = 0`.
pub fn green_product_unit(z: Point, w: Point) -> f64 {
    let q = z.to_complex() * w.to_complex().conj();
    let one_minus_q = Complex64::new(1.0, 0.0) - q;
    assert!(
        one_minus_q.re > 0.0,
        "principal branch of log(1 - z w̄) requires Re(1 - z w̄) > 0"
    );
    let s = z.norm_sqr() + w.norm_sqr();
    let gap = z.dist(w);
    let near = if gap > 0.0 { gap * gap * gap.ln() } else { 0.0 };
    let total = near - s * one_minus_q.norm().ln()
        + (q * one_minus_q.ln()).re
        + (s - 1.0) * log1m_over(q).re;
    total / (8.0 * PI)
}

/// `∫_𝔻 g_z g_w dA` for `z, w` in the closed unit disk.
pub fn green_product_integral(z: Point, w: Point) -> Result<f64> {
    let d = DomainSpec::unit_disk();
    d.require_closed(z)?;
    d.require_closed(w)?;
    Ok(green_product_unit(z, w).max(0.0))
}

/// `∫_D g_z g_w dA` on a general disk: `R²` times the unit-disk value.
pub fn green_product_integral_disk(d: &Disk, z: Point, w: Point) -> Result<f64> {
    let dom = DomainSpec::Disk(*d);
    dom.require_closed(z)?;
    dom.require_closed(w)?;
    Ok(d.radius * d.radius * green_product_unit(d.to_unit(z), d.to_unit(w)).max(0.0))
}

/// `‖g_z‖₂` on the disk `d`.
pub fn green_l2_norm(d: &Disk, z: Point) -> Result<f64> {
    Ok(green_product_integral_disk(d, z, z)?.sqrt())
}

/// `∫_E g_w dA = ((b u)² + (a v)² − (a b)²) / (2(a² + b²))` for `w = u + iv`.
pub fn ellipse_green_area_integral(e: &Ellipse, w: Point) -> Result<f64> {
    DomainSpec::Ellipse(*e).require_closed(w)?;
    let (a, b) = (e.semi_axis_a, e.semi_axis_b);
    let num = (b * w.x).powi(2) + (a * w.y).powi(2) - (a * b).powi(2);
    Ok((num / (2.0 * (a * a + b * b))).min(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};

    fn random_interior(rng: &mut impl Rng, r: f64) -> Point {
        let rho = r * rng.gen::<f64>().sqrt();
        Point::polar(rho, rng.gen_range(0.0..2.0 * PI))
    }

    #[test]
    fn green_disk_values() {
        let unit = Disk::unit();
        let v = green_disk(&unit, Point::ORIGIN, Point::new(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(v, 0.5f64.ln() / (2.0 * PI), epsilon = 1e-15);
        assert_abs_diff_eq!(v, -0.110318, epsilon = 1e-6);

        let a = green_disk(&unit, Point::new(0.3, 0.0), Point::new(0.3, 0.4)).unwrap();
        let b = green_disk(&unit, Point::new(0.3, 0.4), Point::new(0.3, 0.0)).unwrap();
        assert_eq!(a, b);

        let big = Disk::new(Point::new(1.0, 1.0), 2.0).unwrap();
        let v = green_disk(&big, Point::new(1.0, 1.0), Point::new(2.0, 1.0)).unwrap();
        assert_abs_diff_eq!(v, 0.5f64.ln() / (2.0 * PI), epsilon = 1e-15);
    }

    #[test]
    fn green_disk_errors_and_boundary() {
        let unit = Disk::unit();
        let z = Point::new(0.2, 0.1);
        assert_eq!(green_disk(&unit, z, z), Err(Error::CoincidentPoints));
        assert!(green_disk(&unit, z, Point::new(1.2, 0.0)).is_err());
        assert_eq!(green_disk(&unit, z, Point::new(0.0, 1.0)).unwrap(), 0.0);
        assert_eq!(green_unit(z, z), f64::NEG_INFINITY);
    }

    #[test]
    fn green_symmetry_and_sign() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let unit = Disk::unit();
        for _ in 0..1000 {
            let (z, xi) = (
                random_interior(&mut rng, 1.0),
                random_interior(&mut rng, 1.0),
            );
            let a = green_disk(&unit, z, xi).unwrap();
            let b = green_disk(&unit, xi, z).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-13);
            assert!(a <= 0.0);
        }
    }

    #[test]
    fn green_domain_monotonicity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let small = Disk::new(Point::ORIGIN, 0.6).unwrap();
        let large = Disk::new(Point::ORIGIN, 1.0).unwrap();
        for _ in 0..500 {
            let (z, xi) = (
                random_interior(&mut rng, 0.6),
                random_interior(&mut rng, 0.6),
            );
            let g1 = green_disk(&small, z, xi).unwrap();
            let g2 = green_disk(&large, z, xi).unwrap();
            assert!(g2 <= g1 && g1 < 0.0);
        }
    }

    #[test]
    fn poisson_kernel_values() {
        let unit = Disk::unit();
        for k in 0..8 {
            let zeta = Point::polar(1.0, k as f64);
            let p = poisson_kernel_disk(&unit, zeta, Point::ORIGIN).unwrap();
            assert_abs_diff_eq!(p, 1.0 / (2.0 * PI), epsilon = 1e-15);
        }
        let p = poisson_kernel_disk(&unit, Point::new(1.0, 0.0), Point::new(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(p, 3.0 / (2.0 * PI), epsilon = 1e-14);
        assert!(poisson_kernel_disk(&unit, Point::new(0.9, 0.0), Point::ORIGIN).is_err());
        assert!(poisson_kernel_disk(&unit, Point::new(1.0, 0.0), Point::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn poisson_kernel_is_normal_derivative_of_green() {
        let unit = Disk::unit();
        let z = Point::new(0.5, 0.0);
        let h = 1e-6;
        // outward normal derivative at ζ = 1: (g(1) − g(1 − h)) / h, g(1) = 0
        let inner = green_disk(&unit, z, Point::new(1.0 - h, 0.0)).unwrap();
        let fd = -inner / h;
        assert_abs_diff_eq!(fd, 3.0 / (2.0 * PI), epsilon = 1e-5);

        let disk = Disk::new(Point::new(0.5, -1.0), 2.0).unwrap();
        let zeta = disk.boundary_point(0.7);
        let z = disk.from_unit(Point::new(-0.2, 0.3));
        let n = (zeta - disk.center) * (1.0 / disk.radius);
        let inner = green_disk(&disk, z, zeta - n * h).unwrap();
        assert_relative_eq!(
            -inner / h,
            poisson_kernel_disk(&disk, zeta, z).unwrap(),
            max_relative = 1e-5
        );
    }

    #[test]
    fn moment_values() {
        assert_abs_diff_eq!(green_moment(0, Point::ORIGIN).unwrap(), -0.25);
        assert_abs_diff_eq!(green_moment(1, Point::ORIGIN).unwrap(), -1.0 / 16.0);
        assert_abs_diff_eq!(green_moment(0, Point::new(1.0, 0.0)).unwrap(), 0.0);
        assert!(green_moment(0, Point::new(0.0, 1.5)).is_err());
    }

    #[test]
    fn product_integral_special_cases() {
        let z = Point::new(0.5, 0.0);
        let expected = (1.0 - 0.25 * (1.0 - 0.5f64.ln())) / (8.0 * PI);
        assert_abs_diff_eq!(
            green_product_integral(z, Point::ORIGIN).unwrap(),
            expected,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(expected, 0.022947, epsilon = 1e-6);
        // z = 0 by symmetry
        assert_abs_diff_eq!(
            green_product_integral(Point::ORIGIN, z).unwrap(),
            expected,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            green_product_integral(Point::ORIGIN, Point::ORIGIN).unwrap(),
            1.0 / (8.0 * PI),
            epsilon = 1e-15
        );
    }

    /// The closed form as printed for zw ≠ 0, evaluated literally.
    fn product_literal(z: Point, w: Point) -> f64 {
        let (zc, wc) = (z.to_complex(), w.to_complex());
        let zw = zc * wc.conj();
        let one = Complex64::new(1.0, 0.0);
        let coeff = zw + zc.conj() / wc.conj() + wc / zc - one / zw;
        let bracket = coeff * (one - zw).ln() - 2.0 * zw * (zc - wc).norm().ln();
        green_unit(w, z) * (z.norm_sqr() + w.norm_sqr()) / 4.0 + bracket.re / (8.0 * PI)
    }

    #[test]
    fn product_integral_matches_literal_form() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        for _ in 0..200 {
            let (z, w) = (
                random_interior(&mut rng, 0.95),
                random_interior(&mut rng, 0.95),
            );
            if z.norm() < 0.05 || w.norm() < 0.05 || z.dist(w) < 0.05 {
                continue;
            }
            assert_abs_diff_eq!(
                green_product_unit(z, w),
                product_literal(z, w),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn product_integral_diagonal_is_continuous() {
        let z = Point::new(0.4, -0.3);
        let diag = green_product_unit(z, z);
        let r2 = z.norm_sqr();
        let simplified = -(1.0 - r2).ln() * (1.0 - r2).powi(2) / (8.0 * PI * r2);
        assert_abs_diff_eq!(diag, simplified, epsilon = 1e-15);
        for eps in [1e-3, 1e-6, 1e-9, 1e-12] {
            let near = green_product_unit(z, z + Point::new(eps, eps));
            assert!((near - diag).abs() < 10.0 * eps, "eps={eps}");
        }
    }

    #[test]
    fn product_integral_norm_bounds() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(13);
        for _ in 0..100 {
            let z = random_interior(&mut rng, 1.0);
            let n2 = green_product_integral(z, z).unwrap();
            assert!((0.0..=1.0 / (8.0 * PI)).contains(&n2));
        }
        let near_edge = green_l2_norm(&Disk::unit(), Point::new(0.999_999, 0.0)).unwrap();
        assert!(near_edge < 1e-4);
    }

    #[test]
    fn ellipse_area_integral_values() {
        let circle = Ellipse::new(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(
            ellipse_green_area_integral(&circle, Point::ORIGIN).unwrap(),
            green_moment(0, Point::ORIGIN).unwrap(),
            epsilon = 1e-15
        );
        let e = Ellipse::new(1.0, 1.1).unwrap();
        assert_abs_diff_eq!(
            ellipse_green_area_integral(&e, Point::ORIGIN).unwrap(),
            -1.21 / 4.42,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            ellipse_green_area_integral(&e, Point::new(0.0, 1.1)).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert!(ellipse_green_area_integral(&e, Point::new(1.2, 0.0)).is_err());
    }
}
