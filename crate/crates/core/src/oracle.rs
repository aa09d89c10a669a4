//! Reference solutions independent of the series engine: Bessel closed forms,
//! integral representations of the Bessel functions, a shooting solver for
//! radial problems and a finite-difference solver for the general case.

use std::f64::consts::PI;

use crate::domain::{DomainSpec, Point};
use crate::error::{Error, Result};
use crate::grid::{CartesianGrid, RadialProfile};
use crate::series::{BoundaryData, Potential};
use crate::specfun::{bessel_i0, bessel_i1, bessel_k0};

/// `I₀(√ε r) / I₀(√ε)`, the solution of `(Δ − ε)φ = 0` on the unit disk with
/// `φ = 1` on the boundary.
pub fn radial_helmholtz_exact(epsilon: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidArgument(format!("radius {r} outside [0, 1]")));
    }
    let k = epsilon.sqrt();
    Ok(bessel_i0(k * r)? / bessel_i0(k)?)
}

/// `I₀(r²/2) / I₀(1/2)`, the solution for `u = |z|²`, `ε = 1`, `f = 1`.
pub fn radial_quartic_exact(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidArgument(format!("radius {r} outside [0, 1]")));
    }
    Ok(bessel_i0(0.5 * r * r)? / bessel_i0(0.5)?)
}

/// Normal derivative on the unit circle of [`radial_helmholtz_exact`]:
/// `√ε I₁(√ε) / I₀(√ε)`.
pub fn radial_helmholtz_neumann(epsilon: f64) -> Result<f64> {
    let k = epsilon.sqrt();
    Ok(k * bessel_i1(k)? / bessel_i0(k)?)
}

/// `(K₀(1) − K₀(|z|)) / 2π`, the closed form quoted for the Green function of
/// `Δ − 1` on the unit disk with pole at the origin.
///
/// It vanishes on the circle and carries the `ln|z|/2π` singularity, but
/// `(Δ − 1)` applied to it leaves `−K₀(1)/2π`, so it is not the Green
/// function itself; [`green_helmholtz_dirichlet`] is. It is kept because the
/// published remainder curve is computed from it.
pub fn green_helmholtz_exact(z: Point) -> Result<f64> {
    let r = z.norm();
    if r == 0.0 {
        return Err(Error::PoleEvaluation);
    }
    if r > 1.0 + 1e-12 {
        return Err(Error::NotInterior { x: z.x, y: z.y });
    }
    Ok((bessel_k0(1.0)? - bessel_k0(r.min(1.0))?) / (2.0 * PI))
}

/// The Green function of `Δ − 1` on the unit disk with pole at the origin,
/// `−(K₀(r) − K₀(1) I₀(r)/I₀(1)) / 2π`.
pub fn green_helmholtz_dirichlet(z: Point) -> Result<f64> {
    let r = z.norm();
    if r == 0.0 {
        return Err(Error::PoleEvaluation);
    }
    if r > 1.0 + 1e-12 {
        return Err(Error::NotInterior { x: z.x, y: z.y });
    }
    let r = r.min(1.0);
    Ok(-(bessel_k0(r)? - bessel_k0(1.0)? * bessel_i0(r)? / bessel_i0(1.0)?) / (2.0 * PI))
}

/// `K₀(x) = ∫₀^∞ e^{−x cosh t} dt` by the trapezoid rule, which converges
/// double-exponentially for this integrand.
pub fn k0_by_integral(x: f64) -> f64 {
    let h = 0.02;
    let mut sum = 0.5 * (-x).exp();
    let mut k = 1;
    loop {
        let term = (-x * (k as f64 * h).cosh()).exp();
        sum += term;
        if term < 1e-300 || term < sum * 1e-18 {
            break;
        }
        k += 1;
    }
    sum * h
}

/// `I₀(x) = (1/π) ∫₀^π e^{x cos θ} dθ` by the trapezoid rule, exact to
/// rounding once the node count exceeds the effective bandwidth.
pub fn i0_by_integral(x: f64) -> f64 {
    let n = 64 + 4 * x.ceil() as usize;
    let h = PI / n as f64;
    // Scale by e^{−x} to keep the sum in range.
    let mut sum = 0.5 * (1.0 + (-2.0 * x).exp());
    for k in 1..n {
        sum += (x * ((k as f64 * h).cos() - 1.0)).exp();
    }
    sum * h / PI * x.exp()
}

/// `I₀(x) = Σ (x/2)^{2k} / (k!)²` summed until terms stop contributing.
pub fn i0_by_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let (mut term, mut sum, mut k) = (1.0, 1.0, 0.0);
    loop {
        k += 1.0;
        term *= q / (k * k);
        sum += term;
        if term <= sum * 1e-18 {
            return sum;
        }
    }
}

/// Solves `φ'' + φ'/r = ε u(r) φ` on `[0, 1]` with `φ'(0) = 0`, `φ(1) = 1`.
///
/// Shoots from `φ(0) = 1` with classical RK4 on `nodes` uniform steps, using
/// the regular limit `φ'/r → φ''(0) = ε u(0) φ(0) / 2` at the origin, and
/// rescales by `φ(1)`. The error estimate is the Richardson difference
/// against a run with half the step.
pub fn radial_ode_solve(
    u: impl Fn(f64) -> f64,
    epsilon: f64,
    nodes: usize,
) -> Result<RadialProfile> {
    if nodes < 2 {
        return Err(Error::InvalidArgument(
            "need at least two radial steps".into(),
        ));
    }
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    let coarse = shoot(&u, epsilon, nodes, 1)?;
    let fine = shoot(&u, epsilon, nodes, 2)?;
    let diff = coarse
        .values
        .iter()
        .zip(&fine.values)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    Ok(RadialProfile {
        error_estimate: diff / 15.0,
        ..fine
    })
}

fn shoot(
    u: &impl Fn(f64) -> f64,
    epsilon: f64,
    nodes: usize,
    substeps: usize,
) -> Result<RadialProfile> {
    let h = 1.0 / (nodes * substeps) as f64;
    let rhs = |r: f64, phi: f64, v: f64| -> (f64, f64) {
        let source = epsilon * u(r) * phi;
        let acc = if r == 0.0 {
            0.5 * source
        } else {
            source - v / r
        };
        (v, acc)
    };
    let (mut phi, mut v) = (1.0f64, 0.0f64);
    let mut r_out = vec![0.0];
    let mut values = vec![phi];
    let mut slopes = vec![v];
    for step in 0..nodes * substeps {
        let r = step as f64 * h;
        let (k1p, k1v) = rhs(r, phi, v);
        let (k2p, k2v) = rhs(r + 0.5 * h, phi + 0.5 * h * k1p, v + 0.5 * h * k1v);
        let (k3p, k3v) = rhs(r + 0.5 * h, phi + 0.5 * h * k2p, v + 0.5 * h * k2v);
        let (k4p, k4v) = rhs(r + h, phi + h * k3p, v + h * k3v);
        phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if !(phi.is_finite() && v.is_finite()) {
            return Err(Error::Solver("radial shooting overflowed".into()));
        }
        if (step + 1) % substeps == 0 {
            r_out.push((step + 1) as f64 * h);
            values.push(phi);
            slopes.push(v);
        }
    }
    let scale = phi;
    if !(scale > 0.0) {
        return Err(Error::Solver("radial shooting lost positivity".into()));
    }
    values.iter_mut().for_each(|x| *x /= scale);
    slopes.iter_mut().for_each(|x| *x /= scale);
    Ok(RadialProfile {
        r: r_out,
        values,
        slopes,
        error_estimate: 0.0,
    })
}

/// Second-order finite differences for `(Δ − εu)φ = 0`, `φ = f` on the
/// boundary, with Shortley–Weller arms at nodes next to the curved boundary.
///
/// Nodes sit at `centre + (i h, j h)`. Boundary data is evaluated at the polar
/// angle of the boundary point about the domain's centre. The system is an
/// M-matrix for `εu ≥ 0` and is solved by banded LU without pivoting; the
/// solution is accepted when the row-scaled residual is at most `1e−10`.
pub fn fd_solve(
    d: &DomainSpec,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    h: f64,
) -> Result<CartesianGrid> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    let (half_w, half_h) = match d {
        DomainSpec::Disk(disk) => (disk.radius, disk.radius),
        DomainSpec::Ellipse(e) => (e.semi_axis_a, e.semi_axis_b),
    };
    if !(h > 0.0) || 2.0 * half_w.min(half_h) / h < 21.0 {
        return Err(Error::InvalidArgument(format!(
            "grid spacing {h} leaves fewer than 20 interior nodes per axis"
        )));
    }
    u.validate_on(d)?;
    let center = d.centroid();
    let kx = (half_w / h).floor() as i64;
    let ky = (half_h / h).floor() as i64;
    let (nx, ny) = ((2 * kx + 1) as usize, (2 * ky + 1) as usize);
    let point = |i: usize, j: usize| {
        Point::new(
            center.x + (i as i64 - kx) as f64 * h,
            center.y + (j as i64 - ky) as f64 * h,
        )
    };

    let mut index = vec![usize::MAX; nx * ny];
    let mut unknowns = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            if d.contains(point(i, j)) {
                index[j * nx + i] = unknowns.len();
                unknowns.push((i, j));
            }
        }
    }
    let n = unknowns.len();
    let boundary_value = |p: Point| f.eval((p - center).angle());

    // Rows as (diagonal, [(column, coefficient)], rhs), scaled to unit diagonal.
    let dirs: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    let mut rows: Vec<(Vec<(usize, f64)>, f64)> = Vec::with_capacity(n);
    let mut bandwidth = 0usize;
    for &(i, j) in &unknowns {
        let p = point(i, j);
        let mut arms = [h; 4];
        let mut nbr = [None; 4];
        for (k, &(dx, dy)) in dirs.iter().enumerate() {
            let (ni, nj) = (i as i64 + dx as i64, j as i64 + dy as i64);
            let inside = ni >= 0
                && nj >= 0
                && (ni as usize) < nx
                && (nj as usize) < ny
                && index[nj as usize * nx + ni as usize] != usize::MAX;
            if inside {
                nbr[k] = Some(index[nj as usize * nx + ni as usize]);
            } else {
                arms[k] = d.axis_exit(p, (dx, dy)).clamp(1e-300, h);
            }
        }
        let mut diag = epsilon * u.eval(p);
        let mut off = Vec::with_capacity(4);
        let mut rhs = 0.0;
        for axis in 0..2 {
            let (a, b) = (2 * axis, 2 * axis + 1);
            let (ha, hb) = (arms[a], arms[b]);
            let ca = 2.0 / (ha * (ha + hb));
            let cb = 2.0 / (hb * (ha + hb));
            diag += ca + cb;
            for (k, c, arm) in [(a, ca, ha), (b, cb, hb)] {
                match nbr[k] {
                    Some(col) => off.push((col, -c)),
                    None => {
                        let (dx, dy) = dirs[k];
                        let q = p + Point::new(dx as f64, dy as f64) * arm;
                        rhs += c * boundary_value(q);
                    }
                }
            }
        }
        let row_idx = rows.len();
        for e in off.iter_mut() {
            e.1 /= diag;
            bandwidth = bandwidth.max(e.0.abs_diff(row_idx));
        }
        rows.push((off, rhs / diag));
    }

    let solution = banded_solve(&rows, bandwidth)?;
    let residual = rows
        .iter()
        .enumerate()
        .map(|(r, (off, rhs))| {
            let ax = solution[r] + off.iter().map(|(c, a)| a * solution[*c]).sum::<f64>();
            (ax - rhs).abs()
        })
        .fold(0.0, f64::max);
    let scale = solution.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if residual > 1e-10 * scale {
        return Err(Error::NonConvergence {
            estimate: residual,
            tol: 1e-10,
            evaluations: n,
        });
    }

    let mut values = vec![None; nx * ny];
    for (k, &(i, j)) in unknowns.iter().enumerate() {
        values[j * nx + i] = Some(solution[k]);
    }
    Ok(CartesianGrid {
        origin: center,
        h,
        nx,
        ny,
        offset: (kx, ky),
        values,
        residual,
    })
}

/// LU without pivoting for a unit-diagonal band matrix given by rows of
/// off-diagonal entries; adequate for diagonally dominant M-matrices.
fn banded_solve(rows: &[(Vec<(usize, f64)>, f64)], bw: usize) -> Result<Vec<f64>> {
    let n = rows.len();
    let width = 2 * bw + 1;
    let mut band = vec![0.0f64; n * width];
    let at = |r: usize, c: usize| r * width + (c + bw - r);
    let mut b: Vec<f64> = rows.iter().map(|(_, rhs)| *rhs).collect();
    for (r, (off, _)) in rows.iter().enumerate() {
        band[at(r, r)] = 1.0;
        for &(c, v) in off {
            band[at(r, c)] += v;
        }
    }
    for k in 0..n {
        let pivot = band[at(k, k)];
        if !(pivot > 0.0) {
            return Err(Error::Solver(format!(
                "nonpositive pivot {pivot} at row {k}"
            )));
        }
        let last = (k + bw).min(n - 1);
        for r in k + 1..=last {
            let factor = band[at(r, k)] / pivot;
            if factor == 0.0 {
                continue;
            }
            band[at(r, k)] = 0.0;
            for c in k + 1..=last {
                band[at(r, c)] -= factor * band[at(k, c)];
            }
            b[r] -= factor * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let last = (k + bw).min(n - 1);
        let mut s = b[k];
        for c in k + 1..=last {
            s -= band[at(k, c)] * x[c];
        }
        x[k] = s / band[at(k, k)];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Ellipse;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_forms() {
        assert_abs_diff_eq!(
            radial_helmholtz_exact(1.0, 0.0).unwrap(),
            0.789_848,
            epsilon = 1e-6
        );
        assert_eq!(radial_helmholtz_exact(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(radial_helmholtz_exact(0.0, 0.4).unwrap(), 1.0);
        assert_abs_diff_eq!(
            radial_quartic_exact(0.0).unwrap(),
            0.940_306,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(
            green_helmholtz_exact(Point::new(0.5, 0.0)).unwrap(),
            -0.080_12,
            epsilon = 1e-5
        );
        assert_eq!(green_helmholtz_exact(Point::new(0.0, 1.0)).unwrap(), 0.0);
        assert!(matches!(
            green_helmholtz_exact(Point::ORIGIN),
            Err(Error::PoleEvaluation)
        ));
    }

    #[test]
    fn quartic_solution_satisfies_its_equation() {
        let h = 1e-3;
        let phi = |x: f64, y: f64| radial_quartic_exact((x * x + y * y).sqrt()).unwrap();
        let (x, y) = (0.3, 0.4);
        let lap = (phi(x + h, y) + phi(x - h, y) + phi(x, y + h) + phi(x, y - h) - 4.0 * phi(x, y))
            / (h * h);
        assert!((lap - 0.25 * phi(x, y)).abs() < 1e-6);
    }

    #[test]
    fn bessel_oracles_agree() {
        for x in [0.1, 0.5, 1.0, 2.0, 7.5] {
            assert_abs_diff_eq!(
                i0_by_integral(x),
                i0_by_series(x),
                epsilon = 1e-13 * i0_by_series(x)
            );
        }
        assert_abs_diff_eq!(k0_by_integral(1.0), 0.421_024_438_2, epsilon = 1e-10);
    }

    #[test]
    fn shooting_matches_bessel() {
        let p = radial_ode_solve(|_| 1.0, 1.0, 512).unwrap();
        for (r, v) in p.r.iter().zip(&p.values) {
            assert_abs_diff_eq!(*v, radial_helmholtz_exact(1.0, *r).unwrap(), epsilon = 1e-8);
        }
        assert!(p.error_estimate < 1e-8);
        let q = radial_ode_solve(|r| r * r, 1.0, 512).unwrap();
        for (r, v) in q.r.iter().zip(&q.values) {
            assert_abs_diff_eq!(*v, radial_quartic_exact(*r).unwrap(), epsilon = 1e-8);
        }
        let flat = radial_ode_solve(|_| 1.0, 0.0, 16).unwrap();
        assert!(flat.values.iter().all(|v| *v == 1.0));
    }

    #[test]
    fn finite_differences() {
        let d = DomainSpec::unit_disk();
        let one = Potential::Constant(1.0);
        let f = BoundaryData::Constant(1.0);
        let flat = fd_solve(&d, &one, &f, 0.0, 1.0 / 32.0).unwrap();
        assert!(flat.nodes().all(|(_, v)| (v - 1.0).abs() < 1e-12));
        let g = fd_solve(&d, &one, &f, 1.0, 1.0 / 32.0).unwrap();
        let err = g
            .nodes()
            .map(|(p, v)| (v - radial_helmholtz_exact(1.0, p.norm()).unwrap()).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-4, "max error {err}");
        assert!(g.nodes().all(|(_, v)| v > 0.0 && v <= 1.0));
        let e: DomainSpec = Ellipse::new(1.0, 1.1).unwrap().into();
        let ge = fd_solve(&e, &one, &f, 1.0, 1.0 / 32.0).unwrap();
        let origin = ge.nearest(Point::ORIGIN).unwrap();
        assert!((0.529..=1.0).contains(&origin));
        assert!(fd_solve(&d, &one, &f, 1.0, 0.2).is_err());
    }
}
