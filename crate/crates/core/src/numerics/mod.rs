//! Numerical kernel: bracketing root finder, adaptive quadrature, Richardson
//! finite differences and a Sturm-bisection tridiagonal eigensolver.

mod diff;
mod grid;
mod quad;
mod roots;
mod tridiag;

pub use diff::{derivative, DerivativeOrder};
pub use grid::Grid;
pub use quad::{integrate, integrate_with, EndpointSingularity, QuadOptions};
pub use roots::{find_root, find_root_with, RootOptions};
pub use tridiag::{lowest_eigenvalues, lowest_eigenvalues_with, EigenOptions, TridiagonalSymmetric};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("root finder did not converge in {iterations} iterations (last estimate {estimate})")]
    MaxIterations { iterations: usize, estimate: f64 },
    #[error("quadrature exhausted depth budget {depth} (error estimate {error_estimate})")]
    ToleranceNotMet { depth: usize, error_estimate: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
