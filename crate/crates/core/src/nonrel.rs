//! Closed-form Schrödinger solutions of the isotonic oscillator
//! `U(x) = M omega^2 x^2 / 2 + g / (2 x^2)` on the half-line, plus the
//! harmonic and 3D-oscillator references it is compared with.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::envelope::LaguerreEnvelope;
use crate::error::{domain, Error, Result};
use crate::specfun::{hermite, log_gamma};

/// Physical inputs of the one-dimensional problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub g: f64,
    pub hbar: f64,
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64, g: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {v} must be positive"
                )));
            }
        }
        if !g.is_finite() {
            return Err(Error::NonFinite("OscillatorParams"));
        }
        Ok(Self {
            mass,
            omega,
            g,
            hbar,
        })
    }

    /// `hbar = M = omega = 1`.
    pub fn natural(g: f64) -> Self {
        Self {
            mass: 1.0,
            omega: 1.0,
            g,
            hbar: 1.0,
        }
    }

    /// Barrier strength for `g = m (m + 1)`.
    pub fn natural_from_m(m: f64) -> Self {
        Self::natural(m * (m + 1.0))
    }

    pub fn alpha(&self) -> f64 {
        self.mass * self.g / (self.hbar * self.hbar)
    }

    pub fn beta(&self) -> f64 {
        self.mass * self.omega / self.hbar
    }

    pub fn derived(&self) -> Result<DerivedNonrel> {
        let alpha = self.alpha();
        if classify_regime(alpha) == Regime::Unphysical {
            return Err(unphysical(alpha));
        }
        Ok(DerivedNonrel {
            alpha,
            beta: self.beta(),
            xi: 0.5 * (1.0 + 4.0 * alpha).sqrt(),
            m: m_from_g(self.g),
        })
    }

    pub fn isotonic_potential(&self, x: f64) -> f64 {
        self.harmonic_potential(x) + 0.5 * self.g / (x * x)
    }

    pub fn harmonic_potential(&self, x: f64) -> f64 {
        0.5 * self.mass * self.omega * self.omega * x * x
    }
}

/// Dimensionless combinations entering the reduced equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedNonrel {
    pub alpha: f64,
    pub beta: f64,
    pub xi: f64,
    /// Root `m >= -1/2` of `g = m (m + 1)`; absent when `g < -1/4`.
    pub m: Option<f64>,
}

pub fn m_from_g(g: f64) -> Option<f64> {
    let disc = 1.0 + 4.0 * g;
    (disc >= 0.0).then(|| 0.5 * (disc.sqrt() - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Unphysical,
    SelfAdjointExtensionNeeded,
    ImpenetrableBarrier,
}

/// Regime of the inverse-square singularity; `-1/4` belongs to the extension
/// regime and `3/4` to the barrier regime.
pub fn classify_regime(alpha: f64) -> Regime {
    if alpha < -0.25 {
        Regime::Unphysical
    } else if alpha < 0.75 {
        Regime::SelfAdjointExtensionNeeded
    } else {
        Regime::ImpenetrableBarrier
    }
}

fn unphysical(alpha: f64) -> Error {
    Error::UnphysicalRegime(format!("alpha = {alpha} < -1/4: spectrum unbounded below"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    NonrelIsotonic,
    Harmonic1D,
    Oscillator3D,
    DiracSpin,
    DiracPseudospin,
    KleinGordon,
}

/// One eigenvalue with the metadata of how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub n: usize,
    pub value: f64,
    pub branch: Branch,
    /// Zero for closed forms, `|residual|` of the energy equation otherwise.
    pub residual: f64,
    /// Singularity regime, reported for the isotonic branch.
    pub regime: Option<Regime>,
}

impl EnergyLevel {
    pub(crate) fn closed_form(n: usize, value: f64, branch: Branch) -> Self {
        Self {
            n,
            value,
            branch,
            residual: 0.0,
            regime: None,
        }
    }
}

/// `E_n = hbar omega (2n + 1 + sqrt(1 + 4 M g / hbar^2) / 2)`.
pub fn energy(n: usize, p: &OscillatorParams) -> Result<EnergyLevel> {
    let alpha = p.alpha();
    let regime = classify_regime(alpha);
    if regime == Regime::Unphysical {
        return Err(unphysical(alpha));
    }
    let value = p.hbar * p.omega * (2.0 * n as f64 + 1.0 + 0.5 * (1.0 + 4.0 * alpha).sqrt());
    Ok(EnergyLevel {
        regime: Some(regime),
        ..EnergyLevel::closed_form(n, value, Branch::NonrelIsotonic)
    })
}

/// Coefficient `c(x)` of `psi'' = c(x) psi` at energy `E`:
/// `beta^2 x^2 + alpha / x^2 - 2 M E / hbar^2`.
pub fn ode_coefficient(p: &OscillatorParams, energy: f64) -> impl Fn(f64) -> f64 {
    let (alpha, beta) = (p.alpha(), p.beta());
    let eps = 2.0 * p.mass * energy / (p.hbar * p.hbar);
    move |x: f64| beta * beta * x * x + alpha / (x * x) - eps
}

/// Normalized even solution on `x > 0`.
///
/// In the extension regime `-1/4 <= alpha < 3/4` this is still the
/// `x^(1/2 + xi)` branch; the caller can read the regime from [`energy`].
pub fn wavefunction(n: usize, p: &OscillatorParams, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain(
            "wavefunction",
            format!("x = {x} must be positive; use parity_extend"),
        ));
    }
    Ok(isotonic_envelope(n, p)?.value(x))
}

pub(crate) fn isotonic_envelope(n: usize, p: &OscillatorParams) -> Result<LaguerreEnvelope> {
    let d = p.derived()?;
    if !(d.xi > 0.0) {
        return Err(domain("wavefunction", "xi must be positive"));
    }
    LaguerreEnvelope::new(n, d.xi, d.beta)
}

/// Continuation to the negative half-line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ParityValue {
    Value(f64),
    /// Non-integer `m`: the continuation is complex and not normalizable.
    NonNormalizable,
}

const INTEGER_TOL: f64 = 1e-9;

/// `psi(-x) = (-1)^(1+m) psi(x)`: symmetric for odd `m`, antisymmetric for even `m`.
pub fn parity_extend(m: f64, psi_pos: f64, x: f64) -> Result<ParityValue> {
    if !(x < 0.0) {
        return Err(domain("parity_extend", format!("x = {x} must be negative")));
    }
    let rounded = m.round();
    if (m - rounded).abs() > INTEGER_TOL {
        return Ok(ParityValue::NonNormalizable);
    }
    let odd_m = (rounded as i64).rem_euclid(2) == 1;
    Ok(ParityValue::Value(if odd_m { psi_pos } else { -psi_pos }))
}

/// `E_n = (n + 1/2) hbar omega`.
pub fn harmonic_energy(n: usize, p: &OscillatorParams) -> EnergyLevel {
    let value = (n as f64 + 0.5) * p.hbar * p.omega;
    EnergyLevel::closed_form(n, value, Branch::Harmonic1D)
}

/// Normalized full-line harmonic eigenfunction with Hermite argument `sqrt(beta) x`.
pub fn harmonic_wavefunction(n: usize, p: &OscillatorParams, x: f64) -> Result<f64> {
    let beta = p.beta();
    let nf = n as f64;
    let log_norm =
        0.5 * (-nf * std::f64::consts::LN_2 - log_gamma(nf + 1.0)? + 0.5 * (beta / PI).ln());
    Ok((log_norm - 0.5 * beta * x * x).exp() * hermite(n, beta.sqrt() * x))
}

/// `E_{n,l} = hbar omega (2n + l + 3/2)`.
pub fn oscillator3d_energy(n: usize, l: usize, p: &OscillatorParams) -> EnergyLevel {
    let value = p.hbar * p.omega * (2.0 * n as f64 + l as f64 + 1.5);
    EnergyLevel::closed_form(n, value, Branch::Oscillator3D)
}

/// Radial factor `R_{n,l}(r)` with `int_0^inf R^2 r^2 dr = 1`; the angular
/// part is not included.
pub fn oscillator3d_radial(n: usize, l: usize, p: &OscillatorParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(domain(
            "oscillator3d_radial",
            format!("r = {r} must be positive"),
        ));
    }
    let reduced = LaguerreEnvelope::new(n, l as f64 + 0.5, p.beta())?;
    Ok(reduced.value(r) / r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn regime_boundaries() {
        assert_eq!(classify_regime(-1.0), Regime::Unphysical);
        assert_eq!(classify_regime(0.0), Regime::SelfAdjointExtensionNeeded);
        assert_eq!(classify_regime(2.0), Regime::ImpenetrableBarrier);
        assert_eq!(classify_regime(-0.25), Regime::SelfAdjointExtensionNeeded);
        assert_eq!(classify_regime(0.75), Regime::ImpenetrableBarrier);
        assert_eq!(classify_regime(-0.2500001), Regime::Unphysical);
    }

    #[test]
    fn derived_quantities() {
        let d = OscillatorParams::natural(2.0).derived().unwrap();
        assert_eq!(d.alpha, 2.0);
        assert_eq!(d.beta, 1.0);
        assert_relative_eq!(d.xi, 1.5);
        assert_relative_eq!(d.m.unwrap(), 1.0);
        let m = m_from_g(0.5).unwrap();
        assert_relative_eq!(m, 0.3660254037844386, max_relative = 1e-12);
        assert_relative_eq!(m * (m + 1.0), 0.5, max_relative = 1e-12);
        assert_relative_eq!(m_from_g(6.0).unwrap(), 2.0);
        assert!(m_from_g(-0.3).is_none());
    }

    #[test]
    fn energies() {
        for n in 0..10 {
            let nf = n as f64;
            assert_relative_eq!(
                energy(n, &OscillatorParams::natural(2.0)).unwrap().value,
                2.0 * nf + 2.5
            );
            assert_relative_eq!(
                energy(n, &OscillatorParams::natural(0.0)).unwrap().value,
                2.0 * nf + 1.5
            );
        }
        let e0 = energy(0, &OscillatorParams::natural(6.0)).unwrap();
        assert_eq!(e0.value, 3.5);
        assert_eq!(e0.residual, 0.0);
        assert_eq!(e0.regime, Some(Regime::ImpenetrableBarrier));
        assert_eq!(
            energy(0, &OscillatorParams::natural(0.5)).unwrap().regime,
            Some(Regime::SelfAdjointExtensionNeeded)
        );
        assert!(matches!(
            energy(0, &OscillatorParams::natural(-1.0)),
            Err(Error::UnphysicalRegime(_))
        ));
    }

    #[test]
    fn ground_state_matches_low_state_form() {
        let p = OscillatorParams::natural_from_m(1.0);
        let n0 = (2.0 / libm::tgamma(2.5)).sqrt();
        for &x in &[0.1, 0.5, 1.3, 2.7] {
            let expected = n0 * x * x * (-0.5 * x * x).exp();
            assert_relative_eq!(
                wavefunction(0, &p, x).unwrap(),
                expected,
                max_relative = 1e-13
            );
        }
        assert!(wavefunction(0, &p, 1e-9).unwrap().abs() < 1e-17);
        assert!(matches!(
            wavefunction(0, &p, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            wavefunction(0, &p, -1.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn parity_cases() {
        assert_eq!(
            parity_extend(1.0, 0.5, -2.0).unwrap(),
            ParityValue::Value(0.5)
        );
        assert_eq!(
            parity_extend(2.0, 0.5, -2.0).unwrap(),
            ParityValue::Value(-0.5)
        );
        assert_eq!(
            parity_extend(0.0, 0.5, -2.0).unwrap(),
            ParityValue::Value(-0.5)
        );
        assert_eq!(
            parity_extend(0.366, 0.5, -2.0).unwrap(),
            ParityValue::NonNormalizable
        );
        assert!(parity_extend(1.0, 0.5, 2.0).is_err());
    }

    #[test]
    fn harmonic_reference() {
        let p = OscillatorParams::natural(0.0);
        assert_eq!(harmonic_energy(0, &p).value, 0.5);
        assert_eq!(harmonic_energy(5, &p).value, 5.5);
        for n in 0..20 {
            let gap = harmonic_energy(n + 1, &p).value - harmonic_energy(n, &p).value;
            assert_eq!(gap, 1.0);
        }
        assert_relative_eq!(
            harmonic_wavefunction(0, &p, 0.0).unwrap(),
            PI.powf(-0.25),
            max_relative = 1e-15
        );
        for n in 0..7 {
            for &x in &[0.3, 1.1, 2.5] {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_relative_eq!(
                    harmonic_wavefunction(n, &p, -x).unwrap(),
                    sign * harmonic_wavefunction(n, &p, x).unwrap(),
                    max_relative = 1e-14
                );
            }
        }
    }

    #[test]
    fn oscillator3d_reference() {
        let p = OscillatorParams::natural(0.0);
        assert_eq!(oscillator3d_energy(0, 0, &p).value, 1.5);
        assert_eq!(oscillator3d_energy(2, 3, &p).value, 8.5);
        for m in 0..4usize {
            let iso = OscillatorParams::natural_from_m(m as f64);
            for n in 0..6 {
                assert_eq!(
                    oscillator3d_energy(n, m, &p).value,
                    energy(n, &iso).unwrap().value
                );
            }
        }
        let near_origin = oscillator3d_radial(0, 0, &p, 1e-8).unwrap();
        let expected = (2.0 / libm::tgamma(1.5)).sqrt();
        assert_relative_eq!(near_origin, expected, max_relative = 1e-12);
        assert!(oscillator3d_radial(0, 0, &p, 0.0).is_err());
    }

    #[test]
    fn p_wave_radial_equals_isotonic_m1() {
        let p3 = OscillatorParams::natural(0.0);
        let iso = OscillatorParams::natural_from_m(1.0);
        for n in 0..5 {
            for i in 1..=50 {
                let r = 0.1 * i as f64;
                let reduced = r * oscillator3d_radial(n, 1, &p3, r).unwrap();
                let psi = wavefunction(n, &iso, r).unwrap();
                assert!((reduced - psi).abs() <= 1e-12 * psi.abs().max(1e-300) + 1e-15);
            }
        }
    }
}
