use thiserror::Error;

/// Failure modes shared by every solver in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input to {0}")]
    NonFinite(&'static str),
    #[error("domain error in {what}: {detail}")]
    Domain { what: &'static str, detail: String },
    #[error("series for {0} did not converge within the term limit")]
    Divergence(&'static str),
    #[error("unphysical regime: {0}")]
    UnphysicalRegime(String),
    #[error("no root of the energy equation below {upper}")]
    NoRootInRange { upper: f64 },
    #[error("energy {energy} makes the spinor denominator vanish")]
    DegenerateEnergy { energy: f64 },
    #[error("finite-difference grid too coarse: estimated error {estimate:e} exceeds {limit:e}")]
    GridTooCoarse { estimate: f64, limit: f64 },
    #[error("quadrature tolerance {tol:e} not met at depth limit")]
    ToleranceNotMet { tol: f64 },
    #[error("self-consistent iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        what,
        detail: detail.into(),
    }
}
