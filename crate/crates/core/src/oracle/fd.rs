use super::tridiag::kth_eigenvalue;
use super::{Grid, OracleMethod, OracleReport};
use crate::error::{Error, Result};

/// Largest acceptable Richardson error estimate.
pub const MAX_RICHARDSON_ERROR: f64 = 1e-3;

/// Central-difference matrix of `-kinetic d^2/dx^2 + V(x)` on the interior
/// nodes of `grid`, Dirichlet at both ends.
fn assemble(potential: &dyn Fn(f64) -> f64, kinetic: f64, grid: &Grid) -> (Vec<f64>, Vec<f64>) {
    let h = grid.spacing();
    let stiffness = kinetic / (h * h);
    let interior = grid.n_points - 2;
    let diag = (1..=interior)
        .map(|i| 2.0 * stiffness + potential(grid.point(i)))
        .collect();
    let off = vec![-stiffness; interior - 1];
    (diag, off)
}

fn lowest(
    potential: &dyn Fn(f64) -> f64,
    kinetic: f64,
    grid: &Grid,
    indices: &[usize],
) -> Vec<f64> {
    let (diag, off) = assemble(potential, kinetic, grid);
    indices
        .iter()
        .map(|&k| kth_eigenvalue(&diag, &off, k))
        .collect()
}

/// Selected eigenvalues (0-based `indices`) of `-kinetic d^2/dx^2 + V(x)`.
///
/// The operator is solved on `grid` and twice more at successively halved
/// spacing. The two finest solves are Richardson-extrapolated (the scheme is
/// second order); `richardson_error` is the standard estimate
/// `|E_{h/4} - E_{h/2}| / 3` of the error left in the finest raw solve, which
/// bounds the extrapolated value. The coarsest solve only feeds the observed
/// convergence order.
pub fn fd_eigenvalues_at(
    potential: &dyn Fn(f64) -> f64,
    kinetic: f64,
    grid: &Grid,
    indices: &[usize],
) -> Result<OracleReport> {
    if !(kinetic > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "kinetic coefficient {kinetic} must be positive"
        )));
    }
    let max_index = indices.iter().copied().max().unwrap_or(0);
    if max_index + 1 > grid.n_points / 10 {
        return Err(Error::InvalidParameter(format!(
            "{} eigenvalues requested from a {}-point grid",
            max_index + 1,
            grid.n_points
        )));
    }

    let half = grid.halved();
    let quarter = half.halved();
    let coarse = lowest(potential, kinetic, grid, indices);
    let mid = lowest(potential, kinetic, &half, indices);
    let fine = lowest(potential, kinetic, &quarter, indices);

    let mut eigenvalues = Vec::with_capacity(indices.len());
    let mut richardson_error = Vec::with_capacity(indices.len());
    let mut observed_order = Vec::with_capacity(indices.len());
    for ((&c, &m), &f) in coarse.iter().zip(&mid).zip(&fine) {
        let estimate = ((f - m) / 3.0).abs().max(f64::EPSILON * f.abs().max(1.0));
        if estimate > MAX_RICHARDSON_ERROR {
            return Err(Error::GridTooCoarse {
                estimate,
                limit: MAX_RICHARDSON_ERROR,
            });
        }
        eigenvalues.push((4.0 * f - m) / 3.0);
        richardson_error.push(estimate);
        observed_order.push(((c - m) / (m - f)).abs().log2());
    }

    Ok(OracleReport {
        eigenvalues,
        grid: *grid,
        richardson_error,
        observed_order,
        method: OracleMethod::FiniteDifference,
    })
}

/// Lowest `count` eigenvalues; see [`fd_eigenvalues_at`].
pub fn fd_eigenvalues(
    potential: &dyn Fn(f64) -> f64,
    kinetic: f64,
    grid: &Grid,
    count: usize,
) -> Result<OracleReport> {
    let indices: Vec<usize> = (0..count).collect();
    fd_eigenvalues_at(potential, kinetic, grid, &indices)
}

/// Lowest `count` eigenvalues from a single solve on `grid`, without
/// extrapolation. Used to measure the raw convergence order.
pub fn fd_raw_eigenvalues(
    potential: &dyn Fn(f64) -> f64,
    kinetic: f64,
    grid: &Grid,
    count: usize,
) -> Vec<f64> {
    let indices: Vec<usize> = (0..count).collect();
    lowest(potential, kinetic, grid, &indices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn isotonic(g: f64) -> impl Fn(f64) -> f64 {
        move |x: f64| 0.5 * x * x + 0.5 * g / (x * x)
    }

    #[test]
    fn isotonic_g2_levels() {
        let report = fd_eigenvalues(&isotonic(2.0), 0.5, &Grid::default(), 4).unwrap();
        for (n, (&e, &err)) in report
            .eigenvalues
            .iter()
            .zip(&report.richardson_error)
            .enumerate()
        {
            let exact = 2.0 * n as f64 + 2.5;
            assert!(
                (e - exact).abs() <= err,
                "n={n}: {e} vs {exact} (err {err})"
            );
        }
    }

    #[test]
    fn half_line_harmonic_gives_odd_states() {
        // psi ~ x at the origin makes the Dirichlet cutoff error linear in
        // x_min, so the default 1e-4 would dominate the discretization error
        let grid = Grid::default().with_x_min(1e-8).unwrap();
        let report = fd_eigenvalues(&isotonic(0.0), 0.5, &grid, 3).unwrap();
        for (n, (&e, &err)) in report
            .eigenvalues
            .iter()
            .zip(&report.richardson_error)
            .enumerate()
        {
            assert!((e - (2.0 * n as f64 + 1.5)).abs() <= err);
        }
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let grid = Grid::new(1e-4, 20.0, 100).unwrap();
        assert!(matches!(
            fd_eigenvalues(&isotonic(6.0), 0.5, &grid, 8),
            Err(Error::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn too_many_eigenvalues_requested() {
        let grid = Grid::new(1e-4, 20.0, 100).unwrap();
        assert!(fd_eigenvalues(&isotonic(6.0), 0.5, &grid, 11).is_err());
    }
}
