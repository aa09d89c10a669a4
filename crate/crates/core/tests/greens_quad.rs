use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use rand::{rngs::StdRng, Rng, SeedableRng};
use schrodinger_perturb::domain::{Disk, DomainSpec, Point};
use schrodinger_perturb::greens::{green_disk, green_product_integral, green_unit};
use schrodinger_perturb::quad::{integrate_domain, Integrand};

fn product_by_quadrature(z: Point, w: Point, tol: f64) -> (f64, f64) {
    let f = Integrand::new(move |xi: Point| {
        let v = green_unit(z, xi) * green_unit(w, xi);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    })
    .with_singular_point(z)
    .with_singular_point(w);
    let r = integrate_domain(&DomainSpec::unit_disk(), &f, tol).unwrap();
    (r.value, r.error_estimate)
}

#[test]
fn product_integral_with_pole_at_origin_either_way() {
    for w in [Point::new(0.5, 0.0), Point::new(-0.1, 0.7)] {
        let (q, _) = product_by_quadrature(Point::ORIGIN, w, 1e-11);
        assert_abs_diff_eq!(
            green_product_integral(Point::ORIGIN, w).unwrap(),
            q,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            green_product_integral(w, Point::ORIGIN).unwrap(),
            q,
            epsilon = 1e-9
        );
    }
}

#[test]
fn product_integral_matches_quadrature_off_axis() {
    let (z, w) = (Point::new(0.3, 0.0), Point::new(0.0, 0.5));
    let (q, _) = product_by_quadrature(z, w, 1e-10);
    assert_abs_diff_eq!(green_product_integral(z, w).unwrap(), q, epsilon = 1e-7);
}

#[test]
fn log_potential_of_the_disk() {
    // ∫_𝔻 ln|ξ − z| dA = −π(1 − |z|²)/2.
    for r in [0.0, 0.4, 0.8, 0.95] {
        let z = Point::polar(r, 2.0);
        let f = Integrand::new(move |xi: Point| {
            let d = xi.dist(z);
            if d > 0.0 {
                d.ln()
            } else {
                0.0
            }
        })
        .with_singular_point(z);
        let v = integrate_domain(&DomainSpec::unit_disk(), &f, 1e-10)
            .unwrap()
            .value;
        assert_abs_diff_eq!(v, -PI * (1.0 - r * r) / 2.0, epsilon = 1e-9);
    }
}

#[test]
fn error_estimates_are_conservative() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut honest = 0;
    let cases = 40;
    for _ in 0..cases {
        let z = Point::polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..2.0 * PI));
        let w = Point::polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..2.0 * PI));
        let (q, est) = product_by_quadrature(z, w, 1e-6);
        let err = (q - green_product_integral(z, w).unwrap()).abs();
        if err <= est.max(1e-6) {
            honest += 1;
        }
    }
    assert!(honest * 100 >= 95 * cases, "{honest}/{cases}");
}

#[test]
fn general_disk_green_by_pullback() {
    let d = Disk::new(Point::new(1.0, 1.0), 2.0).unwrap();
    let v = green_disk(&d, Point::new(1.0, 1.0), Point::new(2.0, 1.0)).unwrap();
    assert_abs_diff_eq!(v, 0.5f64.ln() / (2.0 * PI), epsilon = 1e-15);
}
