//! Special functions behind the wavefunction formulas.
//!
//! Associated Laguerre polynomials are evaluated by the upward three-term
//! recurrence in the degree, which is stable for `z >= 0` and `alpha > -1`.
//! The Kummer series is accumulated in double-double arithmetic because the
//! terminating series `1F1(-n; b; z)` cancels heavily once `z` is comparable
//! to `4n`.

use twofloat::TwoFloat;

use crate::error::{domain, Error, Result};

const KUMMER_MAX_TERMS: usize = 1000;
const KUMMER_REL_TOL: f64 = 1e-15;

/// Arguments of one polynomial evaluation `P_n^alpha(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyEval {
    pub n: usize,
    pub alpha: f64,
    pub z: f64,
}

impl PolyEval {
    pub fn new(n: usize, alpha: f64, z: f64) -> Result<Self> {
        if !alpha.is_finite() || !z.is_finite() {
            return Err(Error::NonFinite("PolyEval"));
        }
        Ok(Self { n, alpha, z })
    }

    pub fn laguerre(&self) -> f64 {
        laguerre_unchecked(self.n, self.alpha, self.z)
    }

    pub fn laguerre_derivative(&self) -> f64 {
        laguerre_derivative(self.n, self.alpha, self.z)
    }
}

/// Associated Laguerre polynomial `L_n^alpha(z)`.
pub fn laguerre(n: usize, alpha: f64, z: f64) -> Result<f64> {
    if !alpha.is_finite() || !z.is_finite() {
        return Err(Error::NonFinite("laguerre"));
    }
    Ok(laguerre_unchecked(n, alpha, z))
}

pub(crate) fn laguerre_unchecked(n: usize, alpha: f64, z: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut curr = 1.0 + alpha - z;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - z) * curr - (kf + alpha) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// `d/dz L_n^alpha(z) = -L_{n-1}^{alpha+1}(z)`.
pub fn laguerre_derivative(n: usize, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre_unchecked(n - 1, alpha + 1.0, z)
    }
}

fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// Confluent hypergeometric function `1F1(a; b; z)` by direct summation.
///
/// For a non-positive integer `a` the series is a polynomial and is summed
/// exactly to its last term; otherwise terms are added until the term ratio
/// drops below `1e-15` of the running sum.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !z.is_finite() {
        return Err(Error::NonFinite("kummer_1f1"));
    }
    let terminating = is_non_positive_integer(a);
    if is_non_positive_integer(b) && !(terminating && a >= b) {
        return Err(domain(
            "kummer_1f1",
            format!("b = {b} is a non-positive integer reached before the series terminates"),
        ));
    }

    let mut term = TwoFloat::from(1.0);
    let mut sum = term;
    for k in 0..KUMMER_MAX_TERMS {
        let kf = k as f64;
        if terminating && a + kf == 0.0 {
            return Ok(sum.into());
        }
        term = term * (a + kf) * z / (b + kf) / (kf + 1.0);
        sum += term;
        if !terminating && f64::from(term).abs() <= KUMMER_REL_TOL * f64::from(sum).abs() {
            return Ok(sum.into());
        }
    }
    Err(Error::Divergence("kummer_1f1"))
}

/// Physicists' Hermite polynomial `H_n(y)`.
pub fn hermite(n: usize, y: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut curr = 2.0 * y;
    for k in 1..n {
        let next = 2.0 * y * curr - 2.0 * k as f64 * prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Natural logarithm of the gamma function for positive arguments.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("log_gamma"));
    }
    if x <= 0.0 {
        return Err(domain("log_gamma", format!("x = {x} must be positive")));
    }
    Ok(libm::lgamma(x))
}

/// Generalized binomial coefficient `C(n + alpha, n) = L_n^alpha(0)`.
pub fn laguerre_binomial(n: usize, alpha: f64) -> Result<f64> {
    let nf = n as f64;
    Ok((log_gamma(nf + alpha + 1.0)? - log_gamma(alpha + 1.0)? - log_gamma(nf + 1.0)?).exp())
}
