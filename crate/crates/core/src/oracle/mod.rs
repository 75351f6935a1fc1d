//! Independent numerical checks for the closed-form results: a
//! finite-difference eigensolver, adaptive quadrature, dense root scanning,
//! a self-consistent Dirac iteration and a local ODE residual.
//!
//! Nothing here calls the analytic modules; every oracle evaluates the
//! potential and the equations on its own.

use serde::{Deserialize, Serialize};

mod fd;
mod grid;
mod quadrature;
mod residual;
mod roots;
mod selfconsistent;
mod tridiag;

pub use fd::{fd_eigenvalues, fd_eigenvalues_at, fd_raw_eigenvalues, MAX_RICHARDSON_ERROR};
pub use grid::Grid;
pub use quadrature::{quadrature, quadrature_semi_infinite, tail_cutoff, TAIL_CUTOFF};
pub use residual::ode_residual;
pub use roots::{scan_roots, BracketedRoot};
pub use selfconsistent::{dirac_selfconsistent, SELF_CONSISTENT_MAX_ITER, SELF_CONSISTENT_TOL};
pub use tridiag::{gershgorin_bounds, kth_eigenvalue, sturm_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleMethod {
    FiniteDifference,
    Quadrature,
    RootScan,
    SelfConsistent,
}

/// Oracle eigenvalues with the grid they came from and per-eigenvalue
/// error estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub eigenvalues: Vec<f64>,
    pub grid: Grid,
    pub richardson_error: Vec<f64>,
    /// `log2` of successive raw-solve differences over the three spacings.
    pub observed_order: Vec<f64>,
    pub method: OracleMethod,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len().min(y.len()) as f64;
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let var: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    cov / var
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let x = [10.0, 100.0, 1000.0];
        let y: Vec<f64> = x.iter().map(|v: &f64| 3.0 * v.powi(-2)).collect();
        assert!((loglog_slope(&x, &y) + 2.0).abs() < 1e-12);
    }
}
