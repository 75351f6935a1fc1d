use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::{commands, validate, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Spectrum,
    Wavefunction,
    Potential,
    ReproduceTables,
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum BranchArg {
    Nonrel,
    Harmonic,
    Spin,
    Pseudospin,
    KleinGordon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Identities,
    Orthonormality,
    Residuals,
    Oracle,
    Tables,
    Duality,
    Limits,
    All,
}

/// Every physical and sampling input of a run. Unset optional fields take
/// command-specific defaults at execution time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub branch: Option<BranchArg>,
    pub g: Option<f64>,
    pub m: Option<f64>,
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
    pub c: f64,
    pub cs: f64,
    pub cps: f64,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub points: Option<usize>,
    pub compare_harmonic: bool,
    pub suite: Option<Suite>,
}

impl Default for Parameters {
    fn default() -> Self {
        Self {
            branch: None,
            g: None,
            m: None,
            mass: 1.0,
            omega: 1.0,
            hbar: 1.0,
            c: 1.0,
            cs: 0.0,
            cps: 0.0,
            n: None,
            n_max: None,
            x_min: None,
            x_max: None,
            points: None,
            compare_harmonic: false,
            suite: None,
        }
    }
}

impl Parameters {
    /// Barrier strength from `--g` or `--m` (`g = m(m+1)`); zero when neither is set.
    pub fn barrier(&self) -> CliResult<f64> {
        match (self.g, self.m) {
            (Some(_), Some(_)) => Err(CliError::Invalid("give either --g or --m, not both".into())),
            (Some(g), None) => Ok(g),
            (None, Some(m)) => Ok(m * (m + 1.0)),
            (None, None) => Ok(0.0),
        }
    }
}

/// Fully determined description of one run. Runs are deterministic, so two
/// equal manifests always produce identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: CommandKind,
    pub parameters: Parameters,
    pub output_format: Format,
}

impl RunManifest {
    pub fn to_json(&self) -> CliResult<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Result of a run: the main body, any side files keyed by file name, and
/// whether every check inside the run passed.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub body: String,
    pub files: BTreeMap<String, String>,
    pub passed: bool,
}

impl RunOutput {
    pub(crate) fn body(body: String) -> Self {
        Self {
            body,
            files: BTreeMap::new(),
            passed: true,
        }
    }
}

pub fn execute(manifest: &RunManifest) -> CliResult<RunOutput> {
    let p = &manifest.parameters;
    let format = manifest.output_format;
    match manifest.command {
        CommandKind::Spectrum => commands::spectrum(p, format),
        CommandKind::Wavefunction => commands::wavefunction(p, format),
        CommandKind::Potential => commands::potential(p, format),
        CommandKind::ReproduceTables => commands::reproduce_tables(format),
        CommandKind::Validate => validate::run(p.suite.unwrap_or(Suite::All), format),
    }
}
