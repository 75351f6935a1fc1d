//! Nikiforov-Uvarov reduction for the family `sigma(s) = 2s`, `tau~(s) = 1`.
//!
//! Both the Schrödinger equation in `s = x^2` and the spin-symmetric Dirac
//! equation for the upper spinor reduce to
//!
//! ```text
//! psi'' + 1/(2s) psi' + (a2 s^2 + a1 s + a0) / (2s)^2 psi = 0
//! ```
//!
//! so one reduction serves both. Since `sigma'' = 0`, the eigenvalue
//! condition is `lambda_n = -n tau'` with no quadratic term; this module must
//! not be reused for a quadratic `sigma`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sigma~(s) = a2 s^2 + a1 s + a0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricForm {
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl HypergeometricForm {
    pub fn new(a2: f64, a1: f64, a0: f64) -> Self {
        Self { a2, a1, a0 }
    }

    pub fn sigma_tilde(&self, s: f64) -> f64 {
        (self.a2 * s + self.a1) * s + self.a0
    }
}

/// Intermediate objects of the reduction.
///
/// `pi(s) = pi_const + pi_slope s`, `tau(s) = tau_const + tau_slope s`,
/// `rho(s) ~ s^weight_exponent exp(tau_slope s / 2)` and
/// `Omega(s) = s^phi_exponent exp(decay_rate s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuReduction {
    pub pi_const: f64,
    pub pi_slope: f64,
    pub k: f64,
    pub tau_const: f64,
    pub tau_slope: f64,
    pub lambda: f64,
    pub weight_exponent: f64,
    pub phi_exponent: f64,
    pub decay_rate: f64,
}

impl NuReduction {
    pub fn pi(&self, s: f64) -> f64 {
        self.pi_const + self.pi_slope * s
    }

    pub fn tau(&self, s: f64) -> f64 {
        self.tau_const + self.tau_slope * s
    }

    /// `lambda_n = -n tau'(s)`; the `sigma''` term vanishes for linear sigma.
    pub fn lambda_n(&self, n: usize) -> f64 {
        -(n as f64) * self.tau_slope
    }
}

const SIGMA_SLOPE: f64 = 2.0;
const TAU_TILDE: f64 = 1.0;

/// Picks the branch of `pi(s)` with positive constant and negative slope,
/// with `k` taken on the minus sign of the perfect-square condition.
pub fn nu_reduce(form: &HypergeometricForm) -> Result<NuReduction> {
    let HypergeometricForm { a2, a1, a0 } = *form;
    if !(a2.is_finite() && a1.is_finite() && a0.is_finite()) {
        return Err(Error::NonFinite("nu_reduce"));
    }
    if a2 >= 0.0 {
        return Err(Error::UnphysicalRegime(format!(
            "quadratic coefficient a2 = {a2} must be negative for tau' < 0"
        )));
    }
    let discriminant = 1.0 - 4.0 * a0;
    if discriminant < 0.0 {
        return Err(Error::UnphysicalRegime(format!(
            "1 - 4 a0 = {discriminant} < 0: spectrum unbounded below"
        )));
    }

    let root_disc = discriminant.sqrt();
    let rate = (-a2).sqrt();
    let half_gap = (SIGMA_SLOPE - TAU_TILDE) / 2.0;

    let pi_const = half_gap + 0.5 * root_disc;
    let pi_slope = -rate;
    let k = 0.5 * (a1 - rate * root_disc);
    let tau_const = TAU_TILDE + 2.0 * pi_const;
    let tau_slope = 2.0 * pi_slope;

    Ok(NuReduction {
        pi_const,
        pi_slope,
        k,
        tau_const,
        tau_slope,
        lambda: k + pi_slope,
        weight_exponent: tau_const / SIGMA_SLOPE - 1.0,
        phi_exponent: pi_const / SIGMA_SLOPE,
        decay_rate: pi_slope / SIGMA_SLOPE,
    })
}

/// `lambda - lambda_n`; zero exactly at a bound state.
pub fn nu_eigencondition(red: &NuReduction, n: usize) -> f64 {
    red.lambda - red.lambda_n(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn schrodinger_form(beta: f64, alpha: f64, eps: f64) -> HypergeometricForm {
        HypergeometricForm::new(-beta * beta, eps, -alpha)
    }

    #[test]
    fn schrodinger_branch() {
        let (beta, alpha, eps) = (1.0, 2.0, 11.0);
        let red = nu_reduce(&schrodinger_form(beta, alpha, eps)).unwrap();
        assert_relative_eq!(red.pi_const, 2.0);
        assert_relative_eq!(red.pi_slope, -1.0);
        assert_relative_eq!(red.k, 0.5 * (eps - 3.0));
        assert_relative_eq!(red.tau_const, 5.0);
        assert_relative_eq!(red.tau_slope, -2.0);
        assert_relative_eq!(red.weight_exponent, 1.5);
        assert_relative_eq!(red.phi_exponent, 1.0);
        assert_relative_eq!(red.decay_rate, -0.5);
    }

    #[test]
    fn zero_barrier_gives_half_exponent() {
        let red = nu_reduce(&HypergeometricForm::new(-1.0, 3.3, 0.0)).unwrap();
        assert_relative_eq!(red.pi_const, 1.0);
        assert_relative_eq!(red.weight_exponent, 0.5);
    }

    #[test]
    fn spin_form_matches_printed_k() {
        let (nu, a_sq, beta_spin) = (1.3, 0.7, 2.4);
        let red = nu_reduce(&HypergeometricForm::new(-nu * nu, -a_sq, -beta_spin)).unwrap();
        let root = (1.0 + 4.0 * beta_spin).sqrt();
        assert_relative_eq!(red.pi_const, 0.5 * (1.0 + root), max_relative = 1e-15);
        assert_relative_eq!(red.k, -0.5 * (a_sq + nu * root), max_relative = 1e-15);
    }

    #[test]
    fn eigencondition_vanishes_on_spectrum() {
        for &(beta, alpha) in &[(1.0, 2.0), (0.7, 0.5), (2.0, 6.0)] {
            let root = (1.0f64 + 4.0 * alpha).sqrt();
            for n in 0..6 {
                let eps = 2.0 * beta * (2.0 * n as f64 + 1.0) + beta * root;
                let red = nu_reduce(&schrodinger_form(beta, alpha, eps)).unwrap();
                assert!(nu_eigencondition(&red, n).abs() < 1e-12);
            }
            let ground = beta * (2.0 + root);
            let red = nu_reduce(&schrodinger_form(beta, alpha, ground)).unwrap();
            assert!(nu_eigencondition(&red, 0).abs() < 1e-12);
        }
    }

    #[test]
    fn eigencondition_tracks_half_the_energy_shift() {
        let (beta, alpha, n) = (1.0, 2.0, 3);
        let eps = 2.0 * beta * 7.0 + beta * 3.0;
        let red = nu_reduce(&schrodinger_form(beta, alpha, eps + 0.1)).unwrap();
        assert_relative_eq!(nu_eigencondition(&red, n), 0.05, max_relative = 1e-12);
    }

    #[test]
    fn rejects_unbounded_forms() {
        assert!(matches!(
            nu_reduce(&HypergeometricForm::new(-1.0, 1.0, 0.3)),
            Err(Error::UnphysicalRegime(_))
        ));
        assert!(matches!(
            nu_reduce(&HypergeometricForm::new(0.5, 1.0, -1.0)),
            Err(Error::UnphysicalRegime(_))
        ));
        // boundary 1 - 4 a0 = 0 is admissible
        assert!(nu_reduce(&HypergeometricForm::new(-1.0, 1.0, 0.25)).is_ok());
    }
}
