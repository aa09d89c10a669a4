use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point ({x}, {y}) is not interior to the domain")]
    NotInterior { x: f64, y: f64 },

    #[error("point ({x}, {y}) does not lie on the boundary")]
    NotOnBoundary { x: f64, y: f64 },

    #[error("coincident arguments: the kernel is singular on the diagonal")]
    CoincidentPoints,

    #[error("evaluation at the pole of a Green-function series")]
    PoleEvaluation,

    #[error("{function}({x}) is outside the supported argument range")]
    SpecialFunctionDomain { function: &'static str, x: f64 },

    #[error(
        "quadrature did not converge: error estimate {estimate:e} above tolerance {tol:e} after {evaluations} evaluations"
    )]
    NonConvergence {
        estimate: f64,
        tol: f64,
        evaluations: usize,
    },

    #[error("engine mismatch: {0}")]
    EngineMismatch(String),

    #[error("contraction factor {0} is not below 1")]
    Divergent(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("linear solve failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
