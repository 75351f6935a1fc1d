use crate::error::{domain, Result};
use crate::specfun::{laguerre_derivative, laguerre_unchecked, log_gamma};

/// Normalized half-line eigenfunction shape
///
/// ```text
/// u(x) = sqrt(2 rate^(1+order) n! / Gamma(n+order+1)) x^(1/2+order) exp(-rate x^2/2) L_n^order(rate x^2)
/// ```
///
/// shared by the Schrödinger solution, both Dirac spinor branches and the
/// reduced 3D radial function. `int_0^inf u^2 dx = 1` holds analytically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreEnvelope {
    pub n: usize,
    pub order: f64,
    pub rate: f64,
    log_norm: f64,
}

impl LaguerreEnvelope {
    pub fn new(n: usize, order: f64, rate: f64) -> Result<Self> {
        if !(order > -0.5) || !order.is_finite() {
            return Err(domain(
                "LaguerreEnvelope",
                format!("order {order} must exceed -1/2"),
            ));
        }
        if !(rate > 0.0) || !rate.is_finite() {
            return Err(domain(
                "LaguerreEnvelope",
                format!("rate {rate} must be positive"),
            ));
        }
        let nf = n as f64;
        let log_norm = 0.5
            * (std::f64::consts::LN_2 + (1.0 + order) * rate.ln() + log_gamma(nf + 1.0)?
                - log_gamma(nf + order + 1.0)?);
        Ok(Self {
            n,
            order,
            rate,
            log_norm,
        })
    }

    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    fn log_shape(&self, x: f64) -> f64 {
        self.log_norm + (0.5 + self.order) * x.ln() - 0.5 * self.rate * x * x
    }

    /// Value at `x > 0`; the limit at the origin is zero.
    pub fn value(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let z = self.rate * x * x;
        self.log_shape(x).exp() * laguerre_unchecked(self.n, self.order, z)
    }

    /// `du/dx` at `x > 0`.
    pub fn derivative(&self, x: f64) -> f64 {
        let z = self.rate * x * x;
        let poly = laguerre_unchecked(self.n, self.order, z);
        let dpoly = laguerre_derivative(self.n, self.order, z);
        let bracket = ((0.5 + self.order) / x - self.rate * x) * poly + 2.0 * self.rate * x * dpoly;
        self.log_shape(x).exp() * bracket
    }
}
