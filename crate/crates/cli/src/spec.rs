//! Parsers for the compact `kind:values` arguments of `solve` and `min-order`.

use anyhow::{anyhow, bail, Context, Result};
use schrodinger_perturb::fourier::FourierModes;
use schrodinger_perturb::{
    BoundaryData, Disk, DomainSpec, Ellipse, Point, Potential, RadialPolynomial,
};

fn split(spec: &str) -> Result<(&str, Vec<f64>)> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("expected `kind:values`, got `{spec}`"))?;
    let values = rest
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .with_context(|| format!("`{v}` is not a number in `{spec}`"))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.iter().any(|v| !v.is_finite()) {
        bail!("non-finite value in `{spec}`");
    }
    Ok((kind, values))
}

/// `disk:r`, `disk:r,cx,cy` or `ellipse:a,b`.
pub fn domain(spec: &str) -> Result<DomainSpec> {
    let (kind, v) = split(spec)?;
    Ok(match (kind, v.as_slice()) {
        ("disk", [r]) => Disk::new(Point::ORIGIN, *r)?.into(),
        ("disk", [r, cx, cy]) => Disk::new(Point::new(*cx, *cy), *r)?.into(),
        ("ellipse", [a, b]) => Ellipse::new(*a, *b)?.into(),
        _ => bail!("unknown domain `{spec}`; use disk:r, disk:r,cx,cy or ellipse:a,b"),
    })
}

/// `const:c` or `radial:c0,c1,...` for `Σ c_k |z|^{2k}`.
pub fn potential(spec: &str) -> Result<Potential> {
    let (kind, v) = split(spec)?;
    Ok(match (kind, v.as_slice()) {
        ("const", [c]) => Potential::constant(*c)?,
        ("radial", coeffs) if !coeffs.is_empty() => {
            Potential::Radial(RadialPolynomial::new(coeffs.to_vec()))
        }
        _ => bail!("unknown potential `{spec}`; use const:c or radial:c0,c1,..."),
    })
}

/// `const:c` or `modes:a0,a1,b1,a2,b2,...` for `a0 + Σ aₙ cos nθ + bₙ sin nθ`.
pub fn boundary(spec: &str) -> Result<BoundaryData> {
    let (kind, v) = split(spec)?;
    Ok(match (kind, v.as_slice()) {
        ("const", [c]) => BoundaryData::Constant(*c),
        ("modes", [a0, rest @ ..]) => {
            if rest.len() % 2 != 0 {
                bail!("modes need a0 followed by (cos, sin) pairs, got `{spec}`");
            }
            let cos: Vec<f64> = rest.iter().step_by(2).copied().collect();
            let sin: Vec<f64> = rest.iter().skip(1).step_by(2).copied().collect();
            BoundaryData::Modes(FourierModes::from_trig(*a0, &cos, &sin))
        }
        _ => bail!("unknown boundary data `{spec}`; use const:c or modes:a0,a1,b1,..."),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domains() {
        assert_eq!(domain("disk:2").unwrap().diameter(), 4.0);
        assert_eq!(domain("ellipse:1,1.1").unwrap().diameter(), 2.2);
        assert_eq!(
            domain("disk:1,3,4").unwrap().centroid(),
            Point::new(3.0, 4.0)
        );
        for bad in ["disk", "disk:-1", "ellipse:1", "square:1", "disk:x"] {
            assert!(domain(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn potentials_and_boundaries() {
        assert_eq!(potential("const:1.5").unwrap().as_constant(), Some(1.5));
        assert!(potential("const:-1").is_err());
        let r = potential("radial:0,1").unwrap();
        assert_eq!(r.eval(Point::new(0.5, 0.0)), 0.25);
        assert_eq!(boundary("const:2").unwrap().as_constant(), Some(2.0));
        let m = boundary("modes:0.5,1,0").unwrap();
        assert!((m.eval(0.0) - 1.5).abs() < 1e-15);
        assert!(boundary("modes:1,2").is_err());
    }
}
