use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::manifest::{BranchArg, CommandKind, Format, Parameters, RunManifest, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "isotonic",
    version,
    about = "Bound states of the isotonic oscillator"
)]
pub struct Cli {
    /// Also write the run manifest (JSON) to this path.
    #[arg(long, global = true)]
    pub save_manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels n = 0..=n-max.
    Spectrum {
        #[arg(long, value_enum, default_value = "nonrel")]
        branch: BranchArg,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        physics: Physics,
        #[command(flatten)]
        output: Output,
    },
    /// Sampled eigenfunction of level n.
    Wavefunction {
        #[arg(long, value_enum, default_value = "nonrel")]
        branch: BranchArg,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Add the harmonic-oscillator state as a companion column.
        #[arg(long)]
        compare_harmonic: bool,
        #[command(flatten)]
        physics: Physics,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        output: Output,
    },
    /// Sampled isotonic potential.
    Potential {
        #[arg(long)]
        compare_harmonic: bool,
        #[command(flatten)]
        physics: Physics,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        output: Output,
    },
    /// Regenerate both published Dirac tables and diff them against the printed values.
    ReproduceTables {
        /// Directory for the two table CSVs (default: current directory).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run invariant suites and print a pass/fail report.
    Validate {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[command(flatten)]
        output: Output,
    },
    /// Execute a saved run manifest.
    Replay {
        manifest: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Physics {
    /// Barrier strength g.
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Barrier given as m, with g = m(m+1).
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Spin-symmetry constant C_s.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub cs: f64,
    /// Pseudospin-symmetry constant C_ps.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub cps: f64,
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Physics {
    fn apply(&self, p: &mut Parameters) {
        p.g = self.g;
        p.m = self.m;
        p.mass = self.mass;
        p.omega = self.omega;
        p.hbar = self.hbar;
        p.c = self.c;
        p.cs = self.cs;
        p.cps = self.cps;
    }
}

impl Sampling {
    fn apply(&self, p: &mut Parameters) {
        p.x_min = self.x_min;
        p.x_max = self.x_max;
        p.points = self.points;
    }
}

/// Manifest and output location for a parsed command line; `None` for
/// `replay`, whose manifest comes from disk.
pub fn to_manifest(command: &Command) -> Option<(RunManifest, Option<PathBuf>)> {
    let mut p = Parameters::default();
    let (kind, format, out) = match command {
        Command::Spectrum {
            branch,
            n_max,
            physics,
            output,
        } => {
            physics.apply(&mut p);
            p.branch = Some(*branch);
            p.n_max = Some(*n_max);
            (CommandKind::Spectrum, output.format, output.out.clone())
        }
        Command::Wavefunction {
            branch,
            n,
            compare_harmonic,
            physics,
            sampling,
            output,
        } => {
            physics.apply(&mut p);
            sampling.apply(&mut p);
            p.branch = Some(*branch);
            p.n = Some(*n);
            p.compare_harmonic = *compare_harmonic;
            (CommandKind::Wavefunction, output.format, output.out.clone())
        }
        Command::Potential {
            compare_harmonic,
            physics,
            sampling,
            output,
        } => {
            physics.apply(&mut p);
            sampling.apply(&mut p);
            p.compare_harmonic = *compare_harmonic;
            (CommandKind::Potential, output.format, output.out.clone())
        }
        Command::ReproduceTables { out, format } => {
            (CommandKind::ReproduceTables, *format, out.clone())
        }
        Command::Validate { suite, output } => {
            p.suite = Some(*suite);
            (
                CommandKind::Validate,
                Some(output.format.unwrap_or(Format::Json)),
                output.out.clone(),
            )
        }
        Command::Replay { .. } => return None,
    };
    let manifest = RunManifest {
        command: kind,
        parameters: p,
        output_format: format.unwrap_or_default(),
    };
    Some((manifest, out))
}
