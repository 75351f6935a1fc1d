//! Bound states of the isotonic oscillator.
//!
//! Closed-form Schrödinger, spin/pseudospin-symmetric Dirac and Klein-Gordon
//! spectra and eigenfunctions, together with an independent numerical oracle
//! (finite differences, adaptive quadrature, root scanning) that checks them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod envelope;
pub mod error;
pub mod nonrel;
pub mod nu_core;
pub mod oracle;
pub mod reference;
pub mod rel;
pub mod specfun;

pub use envelope::LaguerreEnvelope;
pub use error::{Error, Result};
