use std::f64::consts::PI;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use schrodinger_perturb::error_bounds::{
    dirichlet_remainder_bound, disk_dirichlet_remainder_bound, green_remainder_bound,
    green_remainder_bound_stated, min_order_for_tolerance, BoundCertificate,
    GREEN_PREFACTOR_STATED,
};
use schrodinger_perturb::oracle::{green_helmholtz_exact, radial_helmholtz_exact};
use schrodinger_perturb::series::{dirichlet_series_with, green_series, SeriesSettings};
use schrodinger_perturb::verify::{self, VerifyOptions};
use schrodinger_perturb::{BoundaryData, Disk, DomainSpec, Engine, Error, Point, Potential};

use crate::output::{num, sidecar, write_csv, write_json};
use crate::{spec, Cli, Command, EngineArg, Format, SolveArgs};

/// Marks errors caused by the request rather than the computation.
#[derive(Debug)]
struct ConfigError;

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("invalid configuration")
    }
}

impl std::error::Error for ConfigError {}

pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    let config = err.downcast_ref::<ConfigError>().is_some()
        || err.chain().any(|e| {
            matches!(
                e.downcast_ref::<Error>(),
                Some(
                    Error::InvalidArgument(_)
                        | Error::EngineMismatch(_)
                        | Error::Divergent(_)
                        | Error::NotInterior { .. }
                )
            )
        });
    if config {
        2
    } else {
        1
    }
}

fn config<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| e.context(ConfigError))
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    if !(cli.tol > 0.0) {
        return config(Err(anyhow::anyhow!("--tol must be positive")));
    }
    match &cli.command {
        Command::FigureGreen { out } => figure_green(out),
        Command::FigureDirichlet { out } => figure_dirichlet(out),
        Command::Solve(args) => solve(cli, args),
        Command::Verify {
            filter,
            corrupt_bound_constant,
        } => verify_cmd(cli, filter.as_deref(), *corrupt_bound_constant),
        Command::MinOrder {
            domain,
            potential,
            boundary,
            epsilon,
            target,
            green,
        } => min_order(domain, potential, boundary, *epsilon, *target, *green),
    }
}

fn metadata() -> serde_json::Value {
    json!({
        "program": "sperturb",
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn figure_green(out: &std::path::Path) -> Result<ExitCode> {
    let one = Potential::Constant(1.0);
    let series = green_series(&Disk::unit(), &one, Point::ORIGIN, 1.0, 2)?;
    let mut rows = Vec::with_capacity(200);
    for k in 1..=200 {
        let r = k as f64 / 200.0;
        let z = Point::new(r, 0.0);
        rows.push(vec![r, green_helmholtz_exact(z)? - series.evaluate(z)?]);
    }
    write_csv(out, &["r", "R2"], &rows)?;
    let (arg, max) = rows
        .iter()
        .map(|r| (r[0], r[1]))
        .fold(
            (0.0, f64::NEG_INFINITY),
            |a, b| if b.1 > a.1 { b } else { a },
        );
    let min = rows.iter().map(|r| r[1]).fold(f64::INFINITY, f64::min);
    let cert = green_remainder_bound(&DomainSpec::unit_disk(), &one, 1.0, 2)?;
    let stated = green_remainder_bound_stated(&DomainSpec::unit_disk(), &one, 1.0, 2)?;
    write_json(
        &sidecar(out),
        &json!({
            "metadata": metadata(),
            "rows": rows.len(),
            "max_R2": max,
            "argmax_r": arg,
            "min_R2": min,
            "certificate": cert,
            "certificate_stated_constant": stated,
        }),
    )?;
    println!("max R2 = {} at r = {}", num(max), arg);
    Ok(ExitCode::SUCCESS)
}

fn figure_dirichlet(out: &std::path::Path) -> Result<ExitCode> {
    let d = DomainSpec::unit_disk();
    let s = schrodinger_perturb::series::dirichlet_series(
        &d,
        &Potential::Constant(1.0),
        &BoundaryData::Constant(1.0),
        1.0,
        2,
        Engine::Radial,
    )?;
    let mut rows = Vec::with_capacity(201);
    for k in 0..=200 {
        let r = k as f64 / 200.0;
        let z = Point::new(r, 0.0);
        let exact = radial_helmholtz_exact(1.0, r)?;
        rows.push(vec![
            r,
            s.partial_sum(z, 1)? - exact,
            exact - s.partial_sum(z, 2)?,
        ]);
    }
    write_csv(out, &["r", "R1", "R2"], &rows)?;
    let max1 = rows.iter().map(|r| r[1]).fold(f64::NEG_INFINITY, f64::max);
    let max2 = rows.iter().map(|r| r[2]).fold(f64::NEG_INFINITY, f64::max);
    write_json(
        &sidecar(out),
        &json!({ "metadata": metadata(), "rows": rows.len(), "max_R1": max1, "max_R2": max2 }),
    )?;
    println!("max R1 = {}, max R2 = {}", num(max1), num(max2));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SolveSummary<'a> {
    metadata: serde_json::Value,
    config: &'a SolveArgs,
    tol: f64,
    certified: bool,
    bound_value: f64,
    certificate: BoundCertificate,
    numerical_error: f64,
    value_at_center: f64,
}

fn sample_points(d: &DomainSpec, n: usize) -> Vec<Point> {
    let c = d.centroid();
    let mut pts = vec![c];
    for i in 1..=n {
        let s = i as f64 / n as f64;
        for m in 0..n {
            let t = 2.0 * PI * m as f64 / n as f64;
            let edge = d.boundary_point(t) - c;
            pts.push(c + edge * s);
        }
    }
    pts
}

fn solve(cli: &Cli, args: &SolveArgs) -> Result<ExitCode> {
    let (d, u, f) = config((|| {
        if args.terms == 0 {
            bail!("--terms must be at least 1");
        }
        if !(args.epsilon >= 0.0 && args.epsilon.is_finite()) {
            bail!("--epsilon must be a nonnegative number");
        }
        if args.grid < 1 {
            bail!("--grid must be at least 1");
        }
        Ok((
            spec::domain(&args.domain)?,
            spec::potential(&args.potential)?,
            spec::boundary(&args.boundary)?,
        ))
    })())?;
    let engine = match args.engine {
        EngineArg::Radial => Engine::Radial,
        EngineArg::Quadrature => Engine::Quadrature,
    };
    let settings = SeriesSettings {
        tol: cli.tol,
        ..SeriesSettings::default()
    };
    let sol = dirichlet_series_with(&d, &u, &f, args.epsilon, args.terms, engine, &settings)?;
    let points = sample_points(&d, args.grid);
    let rows = points
        .iter()
        .map(|p| Ok(vec![p.x, p.y, sol.evaluate(*p)?]))
        .collect::<Result<Vec<_>>>()?;
    let summary = SolveSummary {
        metadata: metadata(),
        config: args,
        tol: cli.tol,
        certified: sol.certified,
        bound_value: sol.remainder_bound(),
        certificate: sol.certificate,
        numerical_error: sol.numerical_error,
        value_at_center: rows[0][2],
    };
    if !sol.certified {
        eprintln!(
            "warning: epsilon times the operator-norm bound is {} >= 1; the bound certifies nothing",
            sol.certificate.contraction
        );
    }
    match args.format {
        Format::Csv => {
            write_csv(&args.out, &["x", "y", "phi"], &rows)?;
            write_json(&sidecar(&args.out), &summary)?;
        }
        Format::Json => {
            let samples: Vec<_> = rows
                .iter()
                .map(|r| json!({ "x": r[0], "y": r[1], "phi": r[2] }))
                .collect();
            let mut value = serde_json::to_value(&summary)?;
            value["samples"] = serde_json::Value::Array(samples);
            write_json(&args.out, &value)?;
        }
    }
    println!(
        "bound {} (certified: {}), value at centre {}",
        num(sol.remainder_bound()),
        sol.certified,
        num(rows[0][2])
    );
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(cli: &Cli, filter: Option<&str>, corrupt: bool) -> Result<ExitCode> {
    let mut opts = VerifyOptions {
        tol: cli.tol,
        seed: cli.seed,
        ..VerifyOptions::default()
    };
    if corrupt {
        opts.green_prefactor = GREEN_PREFACTOR_STATED;
    }
    let outcomes = verify::run(&opts, filter);
    if outcomes.is_empty() {
        return config(Err(anyhow::anyhow!("no criterion matches the filter")));
    }
    for o in &outcomes {
        println!(
            "{:<4} {:>3}  {}  [{}]",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.detail
        );
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn min_order(
    domain: &str,
    potential: &str,
    boundary: &str,
    epsilon: f64,
    target: f64,
    green: bool,
) -> Result<ExitCode> {
    let (d, u, f) = config((|| {
        Ok((
            spec::domain(domain)?,
            spec::potential(potential)?,
            spec::boundary(boundary)?,
        ))
    })())?;
    let family = if green {
        green_remainder_bound(&d, &u, epsilon, 1)?
    } else {
        match d.as_disk() {
            Some(disk) => disk_dirichlet_remainder_bound(disk.radius, &u, &f, epsilon, 1)?,
            _ => dirichlet_remainder_bound(&d, &u, &f, epsilon, 1)?,
        }
    };
    let n = min_order_for_tolerance(&family, target).context("no order meets the target")?;
    println!("{n}");
    Ok(ExitCode::SUCCESS)
}
