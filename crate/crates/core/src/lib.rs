//! Neumann-series solutions of Dirichlet problems for `Δ − εu` on disks and
//! ellipses, with certified truncation bounds and independent reference
//! solvers.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod domain;
pub mod dtn;
pub mod error;
pub mod error_bounds;
pub mod fourier;
pub mod greens;
pub mod grid;
pub mod oracle;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod verify;

pub use domain::{Disk, DomainSpec, Ellipse, Point};
pub use error::{Error, Result};
pub use series::{BoundaryData, Engine, Potential, RadialPolynomial, SeriesSolution};
