//! Grid functions: a spectral polar grid on a disk (Chebyshev–Lobatto in the
//! radius, Fourier in the angle) and the radial/Cartesian grids produced by
//! the reference solvers.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::domain::{Disk, Point};
use crate::error::Result;
use crate::fourier::FourierModes;

/// Values on a polar grid over a disk with spectral interpolation.
#[derive(Debug, Clone)]
pub struct PolarGrid {
    disk: Disk,
    /// Scaled radii `s_j ∈ [0, 1]`.
    radii: Vec<f64>,
    bary: Vec<f64>,
    n_theta: usize,
    values: Vec<f64>,
    /// Per ring: `(a_m, b_m)` for `m = 0..=max_mode`.
    rings: Vec<Vec<(f64, f64)>>,
    max_mode: usize,
    interpolation_error: f64,
}

impl PolarGrid {
    /// Samples `f` at `n_radial × n_theta` nodes (the centre once) in parallel.
    pub fn from_fn<F>(disk: Disk, n_radial: usize, n_theta: usize, f: F) -> Result<Self>
    where
        F: Fn(Point) -> Result<f64> + Sync,
    {
        assert!(
            n_radial >= 2 && n_theta >= 2,
            "grid needs at least two nodes per axis"
        );
        let radii: Vec<f64> = (0..n_radial)
            .map(|j| 0.5 * (1.0 - (PI * j as f64 / (n_radial - 1) as f64).cos()))
            .collect();
        let nodes: Vec<(usize, usize)> = (1..n_radial)
            .flat_map(|j| (0..n_theta).map(move |m| (j, m)))
            .collect();
        let mut values = vec![0.0; n_radial * n_theta];
        let center = f(disk.center)?;
        values[..n_theta].iter_mut().for_each(|v| *v = center);
        let rest: Vec<f64> = nodes
            .par_iter()
            .map(|&(j, m)| {
                let theta = 2.0 * PI * m as f64 / n_theta as f64;
                f(disk.center + Point::polar(disk.radius * radii[j], theta))
            })
            .collect::<Result<_>>()?;
        values[n_theta..].copy_from_slice(&rest);
        Ok(Self::from_values(disk, radii, n_theta, values))
    }

    fn from_values(disk: Disk, radii: Vec<f64>, n_theta: usize, values: Vec<f64>) -> Self {
        let n_radial = radii.len();
        let bary: Vec<f64> = (0..n_radial)
            .map(|j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                if j == 0 || j == n_radial - 1 {
                    0.5 * sign
                } else {
                    sign
                }
            })
            .collect();
        let modes: Vec<FourierModes> = values
            .chunks(n_theta)
            .map(FourierModes::from_samples)
            .collect();
        let scale = values
            .iter()
            .fold(0.0f64, |a, v| a.max(v.abs()))
            .max(1e-300);
        let full = n_theta / 2;
        let mut max_mode = 0;
        for m in 1..=full {
            if modes
                .iter()
                .any(|r| r.coeff(m as i64).norm() > 1e-14 * scale)
            {
                max_mode = m;
            }
        }
        let rings: Vec<Vec<(f64, f64)>> = modes
            .iter()
            .map(|r| {
                (0..=max_mode)
                    .map(|m| {
                        let c = r.coeff(m as i64);
                        if m == 0 {
                            (c.re, 0.0)
                        } else {
                            (2.0 * c.re, -2.0 * c.im)
                        }
                    })
                    .collect()
            })
            .collect();

        // Spectral tail estimates: highest angular mode, and the last two
        // Chebyshev coefficients of each retained mode's radial profile.
        let angular_tail = if max_mode == full {
            modes
                .iter()
                .map(|r| 2.0 * r.coeff(full as i64).norm())
                .fold(0.0, f64::max)
        } else {
            1e-14 * scale
        };
        let mut radial_tail = 0.0f64;
        let n = n_radial - 1;
        for m in 0..=max_mode {
            for comp in 0..2 {
                let profile: Vec<f64> = rings
                    .iter()
                    .map(|r| if comp == 0 { r[m].0 } else { r[m].1 })
                    .collect();
                for k in [n - 1, n] {
                    let mut c = 0.0;
                    for (j, v) in profile.iter().enumerate() {
                        let w = if j == 0 || j == n { 0.5 } else { 1.0 };
                        c += w * v * (PI * (j * k) as f64 / n as f64).cos();
                    }
                    c *= 2.0 / n as f64;
                    radial_tail = radial_tail.max(c.abs());
                }
            }
        }

        Self {
            disk,
            radii,
            bary,
            n_theta,
            values,
            rings,
            max_mode,
            interpolation_error: angular_tail + radial_tail,
        }
    }

    pub fn disk(&self) -> &Disk {
        &self.disk
    }

    pub fn node_values(&self) -> &[f64] {
        &self.values
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.radii.len(), self.n_theta)
    }

    /// Spectral estimate of the interpolation error.
    pub fn interpolation_error(&self) -> f64 {
        self.interpolation_error
    }

    pub fn sup_abs_nodes(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    pub fn eval(&self, p: Point) -> f64 {
        let q = self.disk.to_unit(p);
        let s = q.norm().min(1.0);
        let theta = q.angle();
        let (c1, s1) = (theta.cos(), theta.sin());
        let ring_value = |ring: &[(f64, f64)]| -> f64 {
            let mut acc = ring[0].0;
            let (mut cm, mut sm) = (1.0, 0.0);
            for &(a, b) in &ring[1..] {
                let next_c = cm * c1 - sm * s1;
                sm = sm * c1 + cm * s1;
                cm = next_c;
                acc += a * cm + b * sm;
            }
            acc
        };
        let mut num = 0.0;
        let mut den = 0.0;
        for (j, &sj) in self.radii.iter().enumerate() {
            let diff = s - sj;
            if diff == 0.0 {
                return ring_value(&self.rings[j]);
            }
            let w = self.bary[j] / diff;
            num += w * ring_value(&self.rings[j]);
            den += w;
        }
        num / den
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }
}

/// A radial profile on `[0, 1]` with values and slopes, interpolated by
/// cubic Hermite segments.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub r: Vec<f64>,
    pub values: Vec<f64>,
    pub slopes: Vec<f64>,
    pub error_estimate: f64,
}

impl RadialProfile {
    pub fn eval(&self, r: f64) -> f64 {
        let n = self.r.len();
        let r = r.clamp(self.r[0], self.r[n - 1]);
        let k = match self.r.binary_search_by(|x| x.total_cmp(&r)) {
            Ok(k) => return self.values[k],
            Err(k) => k.clamp(1, n - 1),
        };
        let (r0, r1) = (self.r[k - 1], self.r[k]);
        let h = r1 - r0;
        let t = (r - r0) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.values[k - 1]
            + h10 * h * self.slopes[k - 1]
            + h01 * self.values[k]
            + h11 * h * self.slopes[k]
    }
}

/// Nodal values of a finite-difference solution on a Cartesian grid with
/// spacing `h`, nodes at `origin + (i h, j h)`.
#[derive(Debug, Clone)]
pub struct CartesianGrid {
    pub origin: Point,
    pub h: f64,
    pub nx: usize,
    pub ny: usize,
    /// `x` index offset: node `i` sits at `origin.x + (i − offset) h`.
    pub(crate) offset: (i64, i64),
    /// `None` for nodes outside the open domain.
    pub(crate) values: Vec<Option<f64>>,
    pub residual: f64,
}

impl CartesianGrid {
    pub fn node_point(&self, i: usize, j: usize) -> Point {
        Point::new(
            self.origin.x + (i as i64 - self.offset.0) as f64 * self.h,
            self.origin.y + (j as i64 - self.offset.1) as f64 * self.h,
        )
    }

    pub fn value_at_node(&self, i: usize, j: usize) -> Option<f64> {
        self.values.get(j * self.nx + i).copied().flatten()
    }

    /// Interior nodes with their values.
    pub fn nodes(&self) -> impl Iterator<Item = (Point, f64)> + '_ {
        (0..self.ny).flat_map(move |j| {
            (0..self.nx)
                .filter_map(move |i| self.value_at_node(i, j).map(|v| (self.node_point(i, j), v)))
        })
    }

    /// Value at the grid node nearest to `p`, if that node is interior.
    pub fn nearest(&self, p: Point) -> Option<f64> {
        let i = ((p.x - self.origin.x) / self.h).round() as i64 + self.offset.0;
        let j = ((p.y - self.origin.y) / self.h).round() as i64 + self.offset.1;
        if i < 0 || j < 0 || i as usize >= self.nx || j as usize >= self.ny {
            return None;
        }
        self.value_at_node(i as usize, j as usize)
    }

    pub fn interior_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn polar_grid_reproduces_smooth_functions() {
        let disk = Disk::new(Point::new(0.3, -0.2), 1.5).unwrap();
        let f = |p: Point| -> f64 {
            let q = p - disk.center;
            (q.x * 0.7).sin() + q.y * q.y * q.x - 0.1 * (q.x * q.y).exp()
        };
        let g = PolarGrid::from_fn(disk, 25, 64, |p| Ok(f(p))).unwrap();
        for k in 0..50 {
            let p = disk.center + Point::polar(1.5 * (k as f64 / 50.0), 0.77 * k as f64);
            assert_abs_diff_eq!(g.eval(p), f(p), epsilon = 1e-10);
        }
        assert!(g.interpolation_error() < 1e-8);
    }

    #[test]
    fn radial_functions_keep_one_mode() {
        let g = PolarGrid::from_fn(Disk::unit(), 9, 16, |p| Ok(1.0 - p.norm_sqr())).unwrap();
        assert_eq!(g.max_mode(), 0);
        assert_abs_diff_eq!(g.eval(Point::new(0.3, 0.4)), 0.75, epsilon = 1e-14);
        assert!(g.interpolation_error() < 1e-13);
    }

    #[test]
    fn hermite_profile_is_exact_for_cubics() {
        let r: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
        let f = |x: f64| 1.0 - 2.0 * x + x * x * x;
        let df = |x: f64| -2.0 + 3.0 * x * x;
        let p = RadialProfile {
            values: r.iter().map(|&x| f(x)).collect(),
            slopes: r.iter().map(|&x| df(x)).collect(),
            r,
            error_estimate: 0.0,
        };
        for x in [0.0, 0.05, 0.33, 0.999, 1.0] {
            assert_abs_diff_eq!(p.eval(x), f(x), epsilon = 1e-14);
        }
    }
}
