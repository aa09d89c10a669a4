#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "sperturb",
    version,
    about = "Perturbative Dirichlet solutions for Δ − εu with certified error bounds"
)]
pub struct Cli {
    /// Quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seed for sampling-based checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineArg {
    Radial,
    Quadrature,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Remainder of the two-term Green series for Δ − 1 on the unit disk.
    FigureGreen {
        #[arg(long)]
        out: PathBuf,
    },
    /// Remainders R1, R2 for Δφ = φ, φ = 1 on the unit circle.
    FigureDirichlet {
        #[arg(long)]
        out: PathBuf,
    },
    /// Sum the Dirichlet series and write sampled values with a certificate.
    Solve(SolveArgs),
    /// Run the acceptance suite.
    Verify {
        /// Criterion id, tag (green, dirichlet, dtn, ...) or name fragment.
        #[arg(long)]
        filter: Option<String>,
        /// Replace the Green-function bound constant by the larger variant.
        #[arg(long, hide = true)]
        corrupt_bound_constant: bool,
    },
    /// Smallest number of terms whose certified bound meets a target.
    MinOrder {
        #[arg(long, default_value = "disk:1")]
        domain: String,
        #[arg(long, default_value = "const:1")]
        potential: String,
        #[arg(long, default_value = "const:1")]
        boundary: String,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        target: f64,
        /// Use the Green-function bound instead of the Dirichlet bound.
        #[arg(long)]
        green: bool,
    },
}

#[derive(clap::Args, Debug, Clone, serde::Serialize)]
pub struct SolveArgs {
    /// disk:r, disk:r,cx,cy or ellipse:a,b
    #[arg(long, default_value = "disk:1")]
    pub domain: String,
    /// const:c or radial:c0,c1,... (coefficients of |z|^{2k})
    #[arg(long, default_value = "const:1")]
    pub potential: String,
    /// const:c or modes:a0,a1,b1,a2,b2,...
    #[arg(long, default_value = "const:1")]
    pub boundary: String,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 2)]
    pub terms: usize,
    #[arg(long, value_enum, default_value_t = EngineArg::Radial)]
    pub engine: EngineArg,
    /// Output samples per direction (radial and angular).
    #[arg(long, default_value_t = 16)]
    pub grid: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code_for(&err))
        }
    }
}
