//! s-wave Dirac bound states of the isotonic oscillator under spin symmetry
//! (`Delta = V - S = C_s`, `Sigma = U`) and pseudospin symmetry
//! (`Sigma = V + S = C_ps`, `Delta = U`), with the Klein-Gordon case and the
//! nonrelativistic limit.
//!
//! Energies solve transcendental equations. The solvers work in a shifted
//! variable measured from the lower edge of the admissible domain (`E - Mc^2`
//! for spin, `E - Mc^2 - C_ps` for pseudospin) so that large `c` does not
//! cost precision.

use serde::{Deserialize, Serialize};

use crate::envelope::LaguerreEnvelope;
use crate::error::{domain, Error, Result};
use crate::nonrel::{self, Branch, EnergyLevel, OscillatorParams};
use crate::nu_core::{nu_eigencondition, nu_reduce, HypergeometricForm};
use crate::oracle::{ode_residual, quadrature_semi_infinite, Grid};

/// Offset of the first scan point above the lower admissible bound.
pub const SCAN_START: f64 = 1e-9;
/// Multiplicative growth of the scan offset.
pub const SCAN_GROWTH: f64 = 1.05;
/// Scan ceiling in units of `Mc^2`.
pub const E_MAX_FACTOR: f64 = 1e3;
pub const BISECT_TOL: f64 = 1e-12;
pub const BISECT_MAX_ITER: usize = 200;
const DEGENERATE_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symmetry {
    Spin,
    Pseudospin,
}

/// Inputs of the Dirac problem. `coupling` is `C_s` for the spin branch and
/// `C_ps` for the pseudospin branch. Only s-waves are supported: `kappa = -1`
/// for spin, `+1` for pseudospin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiracParams {
    pub mass: f64,
    pub omega: f64,
    pub g: f64,
    pub hbar: f64,
    pub c: f64,
    pub kappa: i32,
    pub coupling: f64,
    pub symmetry: Symmetry,
}

impl DiracParams {
    /// Spin-symmetric s-wave, `hbar = c = 1`.
    pub fn spin(mass: f64, omega: f64, g: f64, c_s: f64) -> Self {
        Self {
            mass,
            omega,
            g,
            hbar: 1.0,
            c: 1.0,
            kappa: -1,
            coupling: c_s,
            symmetry: Symmetry::Spin,
        }
    }

    /// Pseudospin-symmetric s-wave, `hbar = c = 1`.
    pub fn pseudospin(mass: f64, omega: f64, g: f64, c_ps: f64) -> Self {
        Self {
            kappa: 1,
            coupling: c_ps,
            symmetry: Symmetry::Pseudospin,
            ..Self::spin(mass, omega, g, 0.0)
        }
    }

    pub fn with_units(self, hbar: f64, c: f64) -> Self {
        Self { hbar, c, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("mass", self.mass),
            ("omega", self.omega),
            ("hbar", self.hbar),
            ("c", self.c),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {v} must be positive"
                )));
            }
        }
        if !self.g.is_finite() || !self.coupling.is_finite() {
            return Err(Error::NonFinite("DiracParams"));
        }
        let expected = match self.symmetry {
            Symmetry::Spin => -1,
            Symmetry::Pseudospin => 1,
        };
        if self.kappa != expected {
            return Err(Error::InvalidParameter(format!(
                "kappa = {} unsupported for {:?} symmetry (s-wave only, kappa = {expected})",
                self.kappa, self.symmetry
            )));
        }
        Ok(())
    }

    fn require(&self, symmetry: Symmetry) -> Result<()> {
        self.validate()?;
        if self.symmetry != symmetry {
            return Err(Error::InvalidParameter(format!(
                "{symmetry:?} solver called with {:?} parameters",
                self.symmetry
            )));
        }
        Ok(())
    }

    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }

    pub fn hbar_c(&self) -> f64 {
        self.hbar * self.c
    }

    /// `hbar c omega sqrt(2M)`, the right-hand-side scale of both energy equations.
    fn drive(&self) -> f64 {
        self.hbar_c() * self.omega * (2.0 * self.mass).sqrt()
    }

    /// Schrödinger problem reached in the nonrelativistic limit.
    pub fn nonrelativistic(&self) -> Result<OscillatorParams> {
        OscillatorParams::new(self.mass, self.omega, self.g, self.hbar)
    }
}

/// Spin-branch combinations at a trial energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinDerived {
    pub gamma: f64,
    pub a_s_sq: f64,
    pub beta_spin: f64,
    pub nu: f64,
    pub zeta: f64,
}

impl SpinDerived {
    pub fn at(p: &DiracParams, energy: f64) -> Result<Self> {
        let gamma = (p.rest_energy() + energy - p.coupling) / (p.hbar_c() * p.hbar_c());
        if !(gamma > 0.0) {
            return Err(domain(
                "SpinDerived",
                format!("gamma = {gamma} must be positive"),
            ));
        }
        let radicand = 1.0 + 2.0 * p.g * gamma;
        if radicand < 0.0 {
            return Err(domain(
                "SpinDerived",
                format!("1 + 2 g gamma = {radicand} < 0"),
            ));
        }
        Ok(Self {
            gamma,
            a_s_sq: gamma * (p.rest_energy() - energy),
            beta_spin: 0.5 * p.g * gamma,
            nu: (0.5 * p.mass * p.omega * p.omega * gamma).sqrt(),
            zeta: 0.5 * radicand.sqrt(),
        })
    }
}

/// Pseudospin-branch combinations at a trial energy. `gamma_t <= 0` on
/// bound states, so the decay rate uses `|gamma_t|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PseudospinDerived {
    pub gamma_t: f64,
    pub a_ps_sq: f64,
    pub beta_t: f64,
    pub nu_hat: f64,
    pub zeta_t: f64,
}

impl PseudospinDerived {
    pub fn at(p: &DiracParams, energy: f64) -> Result<Self> {
        let gap = energy - p.rest_energy() - p.coupling;
        if gap < 0.0 {
            return Err(domain(
                "PseudospinDerived",
                format!("E = {energy} below Mc^2 + C_ps; no real bound state"),
            ));
        }
        let hc2 = p.hbar_c() * p.hbar_c();
        let gamma_t = -gap / hc2;
        let radicand = 1.0 + 2.0 * p.g * gap / hc2;
        if radicand < 0.0 {
            return Err(domain(
                "PseudospinDerived",
                format!("zeta radicand {radicand} < 0"),
            ));
        }
        Ok(Self {
            gamma_t,
            a_ps_sq: gamma_t * (p.rest_energy() + energy),
            beta_t: 0.5 * p.g * gamma_t,
            nu_hat: (0.5 * p.mass * p.omega * p.omega * gamma_t.abs()).sqrt(),
            zeta_t: 0.5 * radicand.sqrt(),
        })
    }
}

// Spin equation in the excess `t = E - Mc^2`, with `w = Mc^2 + E - C_s`.
fn spin_excess_residual(p: &DiracParams, n: usize, t: f64) -> f64 {
    let w = 2.0 * p.rest_energy() + t - p.coupling;
    let hc2 = p.hbar_c() * p.hbar_c();
    t * w.sqrt() - p.drive() * (2.0 * n as f64 + 1.0 + 0.5 * (2.0 * p.g * w / hc2 + 1.0).sqrt())
}

fn spin_excess_slope(p: &DiracParams, t: f64) -> f64 {
    let w = 2.0 * p.rest_energy() + t - p.coupling;
    let hc2 = p.hbar_c() * p.hbar_c();
    let root = (2.0 * p.g * w / hc2 + 1.0).sqrt();
    w.sqrt() + t / (2.0 * w.sqrt()) - p.drive() * p.g / (2.0 * hc2 * root)
}

// Pseudospin equation in the gap `u = E - Mc^2 - C_ps`.
fn pseudospin_gap_residual(p: &DiracParams, n: usize, u: f64) -> f64 {
    let hc2 = p.hbar_c() * p.hbar_c();
    let total = u + 2.0 * p.rest_energy() + p.coupling;
    let zeta_t = 0.5 * (1.0 + 2.0 * p.g * u / hc2).sqrt();
    total * u.sqrt() - p.drive() * (2.0 * n as f64 + 1.0 + zeta_t)
}

fn pseudospin_gap_slope(p: &DiracParams, u: f64) -> f64 {
    let hc2 = p.hbar_c() * p.hbar_c();
    let total = u + 2.0 * p.rest_energy() + p.coupling;
    let root = (1.0 + 2.0 * p.g * u / hc2).sqrt();
    u.sqrt() + total / (2.0 * u.sqrt()) - p.drive() * p.g / (2.0 * hc2 * root)
}

// Squared spin equation at C_s = 0, in the excess `t = E - Mc^2`.
fn klein_gordon_excess_residual(p: &DiracParams, n: usize, t: f64) -> f64 {
    let mc2 = p.rest_energy();
    let hc2 = p.hbar_c() * p.hbar_c();
    let bracket = 2.0 * n as f64 + 1.0 + 0.5 * (1.0 + 2.0 * p.g * (2.0 * mc2 + t) / hc2).sqrt();
    (2.0 * mc2 + t) * t * t - 2.0 * p.mass * hc2 * p.omega * p.omega * bracket * bracket
}

fn klein_gordon_excess_slope(p: &DiracParams, n: usize, t: f64) -> f64 {
    let mc2 = p.rest_energy();
    let hc2 = p.hbar_c() * p.hbar_c();
    let root = (1.0 + 2.0 * p.g * (2.0 * mc2 + t) / hc2).sqrt();
    let bracket = 2.0 * n as f64 + 1.0 + 0.5 * root;
    4.0 * mc2 * t + 3.0 * t * t - 2.0 * p.mass * p.omega * p.omega * bracket * p.g / root
}

/// Left side minus right side of the spin-symmetric energy equation
/// `(E - Mc^2) sqrt(Mc^2 + E - C_s) = hbar c omega sqrt(2M) (2n + 1 + zeta)`.
pub fn spin_energy_residual(energy: f64, n: usize, p: &DiracParams) -> Result<f64> {
    p.validate()?;
    let w = p.rest_energy() + energy - p.coupling;
    if w < 0.0 {
        return Err(domain(
            "spin_energy_residual",
            format!("Mc^2 + E - C_s = {w} < 0"),
        ));
    }
    SpinDerived::at(p, energy).or_else(|e| if w == 0.0 { Ok(zero_spin()) } else { Err(e) })?;
    Ok(spin_excess_residual(p, n, energy - p.rest_energy()))
}

fn zero_spin() -> SpinDerived {
    SpinDerived {
        gamma: 0.0,
        a_s_sq: 0.0,
        beta_spin: 0.0,
        nu: 0.0,
        zeta: 0.5,
    }
}

/// Left side minus right side of the pseudospin-symmetric energy equation
/// `(E + Mc^2) sqrt(E - Mc^2 - C_ps) = hbar c omega sqrt(2M) (2n + 1 + zeta~)`.
pub fn pseudospin_energy_residual(energy: f64, n: usize, p: &DiracParams) -> Result<f64> {
    p.validate()?;
    PseudospinDerived::at(p, energy)?;
    Ok(pseudospin_gap_residual(
        p,
        n,
        energy - p.rest_energy() - p.coupling,
    ))
}

/// Root of an equation that is negative at `lower` and has a single sign
/// change above it: geometric scan, bisection, one Newton polish.
///
/// Returns the root and `|f(root)|`.
pub(crate) fn solve_from_lower_bound(
    f: &dyn Fn(f64) -> f64,
    slope: &dyn Fn(f64) -> f64,
    lower: f64,
    upper: f64,
) -> Result<(f64, f64)> {
    let mut a = lower;
    let mut offset = SCAN_START;
    let b = loop {
        let x = lower + offset;
        if x > upper {
            return Err(Error::NoRootInRange { upper });
        }
        if f(x) >= 0.0 {
            break x;
        }
        a = x;
        offset *= SCAN_GROWTH;
    };

    let (mut lo, mut hi) = (a, b);
    for _ in 0..BISECT_MAX_ITER {
        if hi - lo <= BISECT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut root = 0.5 * (lo + hi);
    let mut value = f(root);
    let d = slope(root);
    if d.is_finite() && d != 0.0 {
        let polished = root - value / d;
        if polished >= lo && polished <= hi {
            let polished_value = f(polished);
            if polished_value.abs() <= value.abs() {
                root = polished;
                value = polished_value;
            }
        }
    }
    Ok((root, value.abs()))
}

/// `E - Mc^2` of the spin-symmetric level `n`, without forming `E`.
pub fn solve_spin_excess(n: usize, p: &DiracParams) -> Result<(f64, f64)> {
    p.require(Symmetry::Spin)?;
    let mc2 = p.rest_energy();
    let lower = (p.coupling - 2.0 * mc2).max(0.0);
    let upper = E_MAX_FACTOR * mc2 - mc2;
    solve_from_lower_bound(
        &|t| spin_excess_residual(p, n, t),
        &|t| spin_excess_slope(p, t),
        lower,
        upper,
    )
}

pub fn solve_spin_energy(n: usize, p: &DiracParams) -> Result<EnergyLevel> {
    let (excess, residual) = solve_spin_excess(n, p)?;
    Ok(EnergyLevel {
        residual,
        ..EnergyLevel::closed_form(n, p.rest_energy() + excess, Branch::DiracSpin)
    })
}

pub fn solve_pseudospin_energy(n: usize, p: &DiracParams) -> Result<EnergyLevel> {
    p.require(Symmetry::Pseudospin)?;
    let mc2 = p.rest_energy();
    let upper = E_MAX_FACTOR * mc2 - mc2 - p.coupling;
    let (gap, residual) = solve_from_lower_bound(
        &|u| pseudospin_gap_residual(p, n, u),
        &|u| pseudospin_gap_slope(p, u),
        0.0,
        upper,
    )?;
    Ok(EnergyLevel {
        residual,
        ..EnergyLevel::closed_form(n, mc2 + p.coupling + gap, Branch::DiracPseudospin)
    })
}

/// Klein-Gordon level from `(E^2 - M^2c^4)(E - Mc^2) = 2M hbar^2 c^2 omega^2 (2n + 1 + lambda_0)^2`
/// with `lambda_0 = sqrt(1 + 2g(Mc^2 + E)/hbar^2c^2) / 2`; requires `C_s = 0`.
pub fn klein_gordon_energy(n: usize, p: &DiracParams) -> Result<EnergyLevel> {
    p.require(Symmetry::Spin)?;
    if p.coupling != 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Klein-Gordon limit needs C_s = 0, got {}",
            p.coupling
        )));
    }
    let mc2 = p.rest_energy();
    let (excess, residual) = solve_from_lower_bound(
        &|t| klein_gordon_excess_residual(p, n, t),
        &|t| klein_gordon_excess_slope(p, n, t),
        0.0,
        E_MAX_FACTOR * mc2 - mc2,
    )?;
    Ok(EnergyLevel {
        residual,
        ..EnergyLevel::closed_form(n, mc2 + excess, Branch::KleinGordon)
    })
}

fn spin_envelope(n: usize, p: &DiracParams, energy: f64) -> Result<LaguerreEnvelope> {
    let d = SpinDerived::at(p, energy)?;
    LaguerreEnvelope::new(n, d.zeta, d.nu)
}

fn pseudospin_envelope(n: usize, p: &DiracParams, energy: f64) -> Result<LaguerreEnvelope> {
    let d = PseudospinDerived::at(p, energy)?;
    LaguerreEnvelope::new(n, d.zeta_t, d.nu_hat)
}

fn positive_coordinate(what: &'static str, x: f64) -> Result<()> {
    if x > 0.0 {
        Ok(())
    } else {
        Err(domain(what, format!("x = {x} must be positive")))
    }
}

/// Normalized upper spinor `F_{n,-1}(x)` of the spin branch.
pub fn spin_upper_spinor(n: usize, p: &DiracParams, energy: f64, x: f64) -> Result<f64> {
    positive_coordinate("spin_upper_spinor", x)?;
    p.require(Symmetry::Spin)?;
    Ok(spin_envelope(n, p, energy)?.value(x))
}

/// Lower spinor `G = hbar c (d/dx + kappa/x) F / (Mc^2 + E - C_s)`.
pub fn spin_lower_spinor(n: usize, p: &DiracParams, energy: f64, x: f64) -> Result<f64> {
    positive_coordinate("spin_lower_spinor", x)?;
    p.require(Symmetry::Spin)?;
    let denom = p.rest_energy() + energy - p.coupling;
    if denom.abs() < DEGENERATE_TOL {
        return Err(Error::DegenerateEnergy { energy });
    }
    let env = spin_envelope(n, p, energy)?;
    let coupled = env.derivative(x) + p.kappa as f64 * env.value(x) / x;
    Ok(p.hbar_c() * coupled / denom)
}

/// Lower spinor `G_{n,1}(x)` of the pseudospin branch, the real solution of
/// the second-order equation for `G` with decay rate `sqrt(M omega^2 |gamma~| / 2)`.
pub fn pseudospin_lower_spinor(n: usize, p: &DiracParams, energy: f64, x: f64) -> Result<f64> {
    positive_coordinate("pseudospin_lower_spinor", x)?;
    p.require(Symmetry::Pseudospin)?;
    Ok(pseudospin_envelope(n, p, energy)?.value(x))
}

/// Upper spinor `F = hbar c (d/dx - kappa/x) G / (Mc^2 - E + C_ps)`.
pub fn pseudospin_upper_spinor(n: usize, p: &DiracParams, energy: f64, x: f64) -> Result<f64> {
    positive_coordinate("pseudospin_upper_spinor", x)?;
    p.require(Symmetry::Pseudospin)?;
    let denom = p.rest_energy() - energy + p.coupling;
    if denom.abs() < DEGENERATE_TOL {
        return Err(Error::DegenerateEnergy { energy });
    }
    let env = pseudospin_envelope(n, p, energy)?;
    let coupled = env.derivative(x) - p.kappa as f64 * env.value(x) / x;
    Ok(p.hbar_c() * coupled / denom)
}

/// Coefficient `c(x)` of `F'' = c(x) F` for the spin branch:
/// `kappa(kappa+1)/x^2 + A_s^2 + gamma Sigma(x)`.
pub fn spin_ode_coefficient(p: &DiracParams, energy: f64) -> Result<impl Fn(f64) -> f64> {
    let d = SpinDerived::at(p, energy)?;
    let (mass, omega, g) = (p.mass, p.omega, p.g);
    let centrifugal = (p.kappa * (p.kappa + 1)) as f64;
    Ok(move |x: f64| {
        let sigma = 0.5 * mass * omega * omega * x * x + 0.5 * g / (x * x);
        centrifugal / (x * x) + d.a_s_sq + d.gamma * sigma
    })
}

/// Coefficient `c(x)` of `G'' = c(x) G` for the pseudospin branch:
/// `kappa(kappa-1)/x^2 + A_ps^2 - gamma~ Delta(x)`.
pub fn pseudospin_ode_coefficient(p: &DiracParams, energy: f64) -> Result<impl Fn(f64) -> f64> {
    let d = PseudospinDerived::at(p, energy)?;
    let (mass, omega, g) = (p.mass, p.omega, p.g);
    let centrifugal = (p.kappa * (p.kappa - 1)) as f64;
    Ok(move |x: f64| {
        let delta = 0.5 * mass * omega * omega * x * x + 0.5 * g / (x * x);
        centrifugal / (x * x) + d.a_ps_sq - d.gamma_t * delta
    })
}

/// Spin-branch equation written as a hypergeometric-type form in `s = x^2`,
/// with the energy, coupling, `omega^2` and `g` as free arguments so that
/// the pseudospin parameter map can be applied to them.
pub fn spin_hypergeometric_form(
    p: &DiracParams,
    energy: f64,
    coupling: f64,
    omega_sq: f64,
    g: f64,
) -> HypergeometricForm {
    let mc2 = p.rest_energy();
    let gamma = (mc2 + energy - coupling) / (p.hbar_c() * p.hbar_c());
    HypergeometricForm::new(
        -0.5 * p.mass * omega_sq * gamma,
        -gamma * (mc2 - energy),
        -0.5 * g * gamma,
    )
}

/// Points in the pseudospin map comparison.
pub const MAP_CHECK_POINTS: usize = 100;

/// Applies `E -> -E`, `C_s -> -C_ps`, `omega^2 -> -omega^2`, `g -> -g` to the
/// spin-branch reduction and compares the resulting eigencondition, rescaled
/// by `2 hbar^2 c^2 / sqrt(E - Mc^2 - C_ps)`, with the directly coded
/// pseudospin residual over `E - Mc^2 - C_ps` in `(0, 50 hbar omega]`.
/// Returns the largest absolute difference.
pub fn pseudospin_map_check(n: usize, p: &DiracParams) -> Result<f64> {
    p.require(Symmetry::Pseudospin)?;
    let hc2 = p.hbar_c() * p.hbar_c();
    let step = 50.0 * p.hbar * p.omega / MAP_CHECK_POINTS as f64;
    let mut worst = 0.0f64;
    for k in 1..=MAP_CHECK_POINTS {
        let gap = k as f64 * step;
        let energy = p.rest_energy() + p.coupling + gap;
        let form = spin_hypergeometric_form(p, -energy, -p.coupling, -p.omega * p.omega, -p.g);
        let mapped = 2.0 * hc2 / gap.sqrt() * nu_eigencondition(&nu_reduce(&form)?, n);
        let direct = pseudospin_energy_residual(energy, n, p)?;
        worst = worst.max((mapped - direct).abs());
    }
    Ok(worst)
}

/// `|(E_Dirac - Mc^2) - E_Schrodinger|` for each speed of light in
/// `c_values`, at `C_s = 0`.
pub fn nonrel_limit_check(n: usize, p: &DiracParams, c_values: &[f64]) -> Result<Vec<f64>> {
    p.require(Symmetry::Spin)?;
    if p.coupling != 0.0 {
        return Err(Error::InvalidParameter(
            "nonrelativistic limit needs C_s = 0".into(),
        ));
    }
    if c_values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter(
            "c values must be strictly increasing".into(),
        ));
    }
    let target = nonrel::energy(n, &p.nonrelativistic()?)?.value;
    c_values
        .iter()
        .map(|&c| {
            let (excess, _) = solve_spin_excess(n, &p.with_units(p.hbar, c))?;
            Ok((excess - target).abs())
        })
        .collect()
}

/// Sampled upper and lower spinor components of one level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinorSolution {
    pub n: usize,
    pub symmetry: Symmetry,
    pub energy: f64,
    pub x: Vec<f64>,
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    /// `int_0^inf` of the square of the component carrying the closed form
    /// (`F` for spin, `G` for pseudospin), by quadrature.
    pub norm: f64,
    /// Same integral for the companion component.
    pub companion_norm: f64,
    /// Relative local residual of the second-order equation on the grid.
    pub ode_residual: f64,
}

/// Solves level `n` and samples both spinor components on `grid`.
pub fn spinor_solution(n: usize, p: &DiracParams, grid: &Grid) -> Result<SpinorSolution> {
    if !(grid.x_min > 0.0) {
        return Err(domain("spinor_solution", "grid must start at x > 0"));
    }
    let x = grid.points();
    match p.symmetry {
        Symmetry::Spin => {
            let energy = solve_spin_energy(n, p)?.value;
            let upper = sample(&x, |xi| spin_upper_spinor(n, p, energy, xi))?;
            let lower = sample(&x, |xi| spin_lower_spinor(n, p, energy, xi))?;
            let coefficient = spin_ode_coefficient(p, energy)?;
            Ok(SpinorSolution {
                n,
                symmetry: p.symmetry,
                energy,
                norm: squared_norm(&|xi| spin_upper_spinor(n, p, energy, xi))?,
                companion_norm: squared_norm(&|xi| spin_lower_spinor(n, p, energy, xi))?,
                ode_residual: ode_residual(&upper, &coefficient, grid),
                x,
                upper,
                lower,
            })
        }
        Symmetry::Pseudospin => {
            let energy = solve_pseudospin_energy(n, p)?.value;
            let upper = sample(&x, |xi| pseudospin_upper_spinor(n, p, energy, xi))?;
            let lower = sample(&x, |xi| pseudospin_lower_spinor(n, p, energy, xi))?;
            let coefficient = pseudospin_ode_coefficient(p, energy)?;
            Ok(SpinorSolution {
                n,
                symmetry: p.symmetry,
                energy,
                norm: squared_norm(&|xi| pseudospin_lower_spinor(n, p, energy, xi))?,
                companion_norm: squared_norm(&|xi| pseudospin_upper_spinor(n, p, energy, xi))?,
                ode_residual: ode_residual(&lower, &coefficient, grid),
                x,
                upper,
                lower,
            })
        }
    }
}

fn sample(x: &[f64], f: impl Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
    x.iter().map(|&xi| f(xi)).collect()
}

fn squared_norm(f: &dyn Fn(f64) -> Result<f64>) -> Result<f64> {
    let square = |x: f64| {
        if x > 0.0 {
            f(x).map(|v| v * v).unwrap_or(f64::NAN)
        } else {
            0.0
        }
    };
    quadrature_semi_infinite(&square, 0.0, NORM_TOL)
}
