use super::fd::fd_eigenvalues_at;
use super::{Grid, OracleMethod, OracleReport};
use crate::error::{Error, Result};
use crate::rel::{DiracParams, Symmetry};

pub const SELF_CONSISTENT_TOL: f64 = 1e-9;
pub const SELF_CONSISTENT_MAX_ITER: usize = 200;
const DAMPING: f64 = 0.5;

/// Spin-symmetric level `n` without the transcendental energy equation.
///
/// For a trial energy `E` the upper-spinor equation
/// `-F'' + gamma(E) Sigma(x) F = lambda F` is linear with
/// `gamma = (Mc^2 + E - C_s) / (hbar c)^2`; its `(n+1)`-th finite-difference
/// eigenvalue fixes the next energy through
/// `lambda (hbar c)^2 = (Mc^2 + E - C_s)(E - Mc^2)`. The update is halved
/// whenever its sign flips. The reported error is the eigenvalue's
/// Richardson estimate carried through that relation.
pub fn dirac_selfconsistent(n: usize, p: &DiracParams) -> Result<OracleReport> {
    p.validate()?;
    if p.symmetry != Symmetry::Spin {
        return Err(Error::InvalidParameter(
            "self-consistent oracle needs spin symmetry".into(),
        ));
    }
    let grid = Grid::default();
    let mc2 = p.mass * p.c * p.c;
    let hc2 = (p.hbar * p.c).powi(2);
    let offset = 2.0 * mc2 - p.coupling;

    let solve = |energy: f64| -> Result<(f64, f64, f64)> {
        let gamma = (mc2 + energy - p.coupling) / hc2;
        if !(gamma > 0.0) {
            return Err(Error::UnphysicalRegime(format!(
                "gamma = {gamma} at E = {energy}"
            )));
        }
        let sigma =
            |x: f64| gamma * (0.5 * p.mass * p.omega * p.omega * x * x + 0.5 * p.g / (x * x));
        let report = fd_eigenvalues_at(&sigma, 1.0, &grid, &[n])?;
        let coupled = report.eigenvalues[0] * hc2;
        let excess = excess_from_product(offset, coupled);
        let err = report.richardson_error[0] * hc2 / (offset + 2.0 * excess).abs();
        Ok((mc2 + excess, err, report.observed_order[0]))
    };

    let mut energy =
        mc2 + (p.coupling - 2.0 * mc2).max(0.0) + p.hbar * p.omega * (2.0 * n as f64 + 2.0);
    let mut last_step = 0.0f64;
    for _ in 0..SELF_CONSISTENT_MAX_ITER {
        let (next, err, order) = solve(energy)?;
        let mut step = next - energy;
        if step * last_step < 0.0 {
            step *= DAMPING;
        }
        energy += step;
        last_step = step;
        if step.abs() <= SELF_CONSISTENT_TOL {
            return Ok(OracleReport {
                eigenvalues: vec![energy],
                grid,
                richardson_error: vec![err],
                observed_order: vec![order],
                method: OracleMethod::SelfConsistent,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: SELF_CONSISTENT_MAX_ITER,
    })
}

/// Positive root `t` of `(offset + t) t = product`, cancellation-free.
fn excess_from_product(offset: f64, product: f64) -> f64 {
    let root = (offset * offset + 4.0 * product).sqrt();
    if offset >= 0.0 {
        2.0 * product / (offset + root)
    } else {
        0.5 * (root - offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_inverse() {
        for &(b, l) in &[(2.0, 3.0), (-1.5, 0.7), (1e8, 2.0)] {
            let t = excess_from_product(b, l);
            assert!(((b + t) * t - l).abs() <= 1e-12 * l.max(1.0));
        }
    }

    #[test]
    fn table_cell_g2() {
        let report = dirac_selfconsistent(0, &DiracParams::spin(1.0, 1.0, 2.0, 0.0)).unwrap();
        let tol = report.richardson_error[0].max(1e-6);
        assert!((report.eigenvalues[0] - 3.1503636).abs() <= tol);
        assert_eq!(report.method, OracleMethod::SelfConsistent);
    }

    #[test]
    fn pseudospin_rejected() {
        assert!(dirac_selfconsistent(0, &DiracParams::pseudospin(1.0, 1.0, 2.0, 0.0)).is_err());
    }
}
