//! Certified truncation bounds for the Neumann series and the operator-norm
//! estimates behind them.
//!
//! Every bound has the shape `prefactor · qⁿ` with contraction `q = ε ‖T‖`,
//! where `‖T‖` is bounded through the domain's diameter (`d/√12`) or, for
//! disks, its radius (`R/2`).
//!
//! The Green-function remainder uses the prefactor `d / (4√3 π)`, which is
//! what the chain `‖g_w‖₂² ≤ d²/(24π)` actually yields and what reproduces
//! `1/(6π√3) ≈ 0.0306` on the unit disk. The alternative printed prefactor
//! `d / (4√(3π))` is larger (still a valid bound) and is available through
//! [`green_remainder_bound_stated`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::series::{BoundaryData, Potential};

/// Prefactor per unit diameter of the Green-function remainder.
pub const GREEN_PREFACTOR: f64 = 0.045_944_074_618_482_676; // 1 / (4√3 π)
/// The larger prefactor `1 / (4√(3π))`.
pub const GREEN_PREFACTOR_STATED: f64 = 0.081_433_751_983_819_98;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaId {
    GreenThm,
    GreenThmStated,
    DirichletThm,
    DiskCorollary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub epsilon: f64,
    pub sup_norm_u: f64,
    pub diameter: f64,
    pub area: Option<f64>,
    pub radius: Option<f64>,
    pub sup_norm_f: Option<f64>,
    pub order: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub bound_value: f64,
    pub formula_id: FormulaId,
    pub inputs: BoundInputs,
    /// `q` in `bound = prefactor · qⁿ`.
    pub contraction: f64,
    pub prefactor: f64,
}

impl BoundCertificate {
    fn build(formula_id: FormulaId, inputs: BoundInputs, contraction: f64, prefactor: f64) -> Self {
        Self {
            bound_value: prefactor * contraction.powi(inputs.order as i32),
            formula_id,
            inputs,
            contraction,
            prefactor,
        }
    }

    /// The same family evaluated at another order.
    pub fn at_order(&self, n: u32) -> Self {
        let mut inputs = self.inputs;
        inputs.order = n;
        Self::build(self.formula_id, inputs, self.contraction, self.prefactor)
    }

    /// The bound certifies convergence only when the contraction is below 1.
    pub fn is_convergent(&self) -> bool {
        self.contraction < 1.0
    }
}

fn require_order(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(
            "truncation order must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

fn require_epsilon(epsilon: f64) -> Result<()> {
    if epsilon >= 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )))
    }
}

/// Upper bound on `‖T‖` as an operator on `L²(D)`.
pub fn operator_norm_bound(d: &DomainSpec, u: &Potential) -> f64 {
    let sup = u.sup_norm(d);
    match d {
        DomainSpec::Disk(disk) => sup * disk.radius / 2.0,
        DomainSpec::Ellipse(_) => sup * diameter_factor(d),
    }
}

fn diameter_factor(d: &DomainSpec) -> f64 {
    d.diameter() / 12f64.sqrt()
}

/// `‖Rₙ‖∞ ≤ (ε‖u‖∞ d/√12)ⁿ · d/(4√3 π)` for the perturbed Green function.
pub fn green_remainder_bound(
    d: &DomainSpec,
    u: &Potential,
    epsilon: f64,
    n: u32,
) -> Result<BoundCertificate> {
    green_remainder_bound_with_prefactor(d, u, epsilon, n, GREEN_PREFACTOR, FormulaId::GreenThm)
}

/// As [`green_remainder_bound`] with the prefactor `d/(4√(3π))`.
pub fn green_remainder_bound_stated(
    d: &DomainSpec,
    u: &Potential,
    epsilon: f64,
    n: u32,
) -> Result<BoundCertificate> {
    green_remainder_bound_with_prefactor(
        d,
        u,
        epsilon,
        n,
        GREEN_PREFACTOR_STATED,
        FormulaId::GreenThmStated,
    )
}

pub(crate) fn green_remainder_bound_with_prefactor(
    d: &DomainSpec,
    u: &Potential,
    epsilon: f64,
    n: u32,
    per_diameter: f64,
    formula_id: FormulaId,
) -> Result<BoundCertificate> {
    require_order(n)?;
    require_epsilon(epsilon)?;
    let sup = u.sup_norm(d);
    let inputs = BoundInputs {
        epsilon,
        sup_norm_u: sup,
        diameter: d.diameter(),
        area: None,
        radius: None,
        sup_norm_f: None,
        order: n,
    };
    Ok(BoundCertificate::build(
        formula_id,
        inputs,
        epsilon * sup * diameter_factor(d),
        per_diameter * d.diameter(),
    ))
}

/// `‖Rₙ‖∞ ≤ (ε‖u‖∞ d/√12)ⁿ · ‖f‖∞ √area / √(2π)` for the Dirichlet series on
/// any supported domain.
pub fn dirichlet_remainder_bound(
    d: &DomainSpec,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n: u32,
) -> Result<BoundCertificate> {
    require_order(n)?;
    require_epsilon(epsilon)?;
    let (sup_u, sup_f) = (u.sup_norm(d), f.sup_norm());
    let inputs = BoundInputs {
        epsilon,
        sup_norm_u: sup_u,
        diameter: d.diameter(),
        area: Some(d.area()),
        radius: None,
        sup_norm_f: Some(sup_f),
        order: n,
    };
    Ok(BoundCertificate::build(
        FormulaId::DirichletThm,
        inputs,
        epsilon * sup_u * diameter_factor(d),
        sup_f * (d.area() / (2.0 * PI)).sqrt(),
    ))
}

/// `‖Rₙ‖∞ ≤ (ε r ‖u‖∞ / 2)ⁿ · r ‖f‖∞ / √2` on a disk of radius `r`.
pub fn disk_dirichlet_remainder_bound(
    radius: f64,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n: u32,
) -> Result<BoundCertificate> {
    disk_dirichlet_remainder_bound_on(
        &DomainSpec::Disk(crate::domain::Disk::new(
            crate::domain::Point::ORIGIN,
            radius,
        )?),
        u,
        f,
        epsilon,
        n,
    )
}

pub(crate) fn disk_dirichlet_remainder_bound_on(
    d: &DomainSpec,
    u: &Potential,
    f: &BoundaryData,
    epsilon: f64,
    n: u32,
) -> Result<BoundCertificate> {
    require_order(n)?;
    require_epsilon(epsilon)?;
    let radius = d
        .as_disk()
        .ok_or_else(|| Error::InvalidArgument("disk bound requested for a non-disk".into()))?
        .radius;
    let (sup_u, sup_f) = (u.sup_norm(d), f.sup_norm());
    let inputs = BoundInputs {
        epsilon,
        sup_norm_u: sup_u,
        diameter: 2.0 * radius,
        area: None,
        radius: Some(radius),
        sup_norm_f: Some(sup_f),
        order: n,
    };
    Ok(BoundCertificate::build(
        FormulaId::DiskCorollary,
        inputs,
        epsilon * radius * sup_u / 2.0,
        radius * sup_f / 2f64.sqrt(),
    ))
}

/// Smallest `n ≥ 1` whose bound in the certificate's family is at most `target`.
pub fn min_order_for_tolerance(family: &BoundCertificate, target: f64) -> Result<u32> {
    if !(target > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "target must be positive, got {target}"
        )));
    }
    let q = family.contraction;
    if q >= 1.0 {
        return Err(Error::Divergent(q));
    }
    let mut n = 1u32;
    while family.at_order(n).bound_value > target {
        n += 1;
        if n > 10_000 {
            return Err(Error::Divergent(q));
        }
    }
    Ok(n)
}
