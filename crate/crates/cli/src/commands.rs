use isotonic::nonrel::{
    self, energy, harmonic_energy, harmonic_wavefunction, m_from_g, parity_extend, EnergyLevel,
    OscillatorParams, ParityValue,
};
use isotonic::reference::{ReferenceColumn, PSEUDOSPIN_TABLE, SPIN_TABLE, TABLE_TOLERANCE};
use isotonic::rel::{
    klein_gordon_energy, pseudospin_lower_spinor, pseudospin_upper_spinor, solve_pseudospin_energy,
    solve_spin_energy, spin_lower_spinor, spin_upper_spinor, DiracParams, PseudospinDerived,
    SpinDerived,
};
use serde::Serialize;
use serde_json::json;

use crate::format;
use crate::manifest::{BranchArg, Format, Parameters, RunOutput};
use crate::{CliError, CliResult};

pub const TABLE1_FILE: &str = "table1_spin.csv";
pub const TABLE2_FILE: &str = "table2_pseudospin.csv";

const DEFAULT_N_MAX: usize = 10;

fn oscillator(p: &Parameters) -> CliResult<OscillatorParams> {
    Ok(OscillatorParams::new(
        p.mass,
        p.omega,
        p.barrier()?,
        p.hbar,
    )?)
}

fn spin_params(p: &Parameters) -> CliResult<DiracParams> {
    let d = DiracParams::spin(p.mass, p.omega, p.barrier()?, p.cs).with_units(p.hbar, p.c);
    d.validate()?;
    Ok(d)
}

fn pseudospin_params(p: &Parameters) -> CliResult<DiracParams> {
    let d = DiracParams::pseudospin(p.mass, p.omega, p.barrier()?, p.cps).with_units(p.hbar, p.c);
    d.validate()?;
    Ok(d)
}

fn level(branch: BranchArg, n: usize, p: &Parameters) -> CliResult<EnergyLevel> {
    Ok(match branch {
        BranchArg::Nonrel => energy(n, &oscillator(p)?)?,
        BranchArg::Harmonic => harmonic_energy(n, &oscillator(p)?),
        BranchArg::Spin => solve_spin_energy(n, &spin_params(p)?)?,
        BranchArg::Pseudospin => solve_pseudospin_energy(n, &pseudospin_params(p)?)?,
        BranchArg::KleinGordon => klein_gordon_energy(n, &spin_params(p)?)?,
    })
}

pub fn spectrum(p: &Parameters, format: Format) -> CliResult<RunOutput> {
    let branch = p.branch.unwrap_or(BranchArg::Nonrel);
    let n_max = p.n_max.unwrap_or(DEFAULT_N_MAX);
    let levels = (0..=n_max)
        .map(|n| level(branch, n, p))
        .collect::<CliResult<Vec<_>>>()?;
    let body = match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = levels
                .iter()
                .map(|l| {
                    vec![
                        l.n.to_string(),
                        format::energy(l.value),
                        format::small(l.residual),
                    ]
                })
                .collect();
            format::csv(&["n", "energy", "residual"], &rows)
        }
        Format::Json => to_json(&levels)?,
    };
    Ok(RunOutput::body(body))
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

struct Sampling {
    x_min: f64,
    x_max: f64,
    points: usize,
}

impl Sampling {
    fn resolve(p: &Parameters, x_min: f64, x_max: f64, points: usize) -> CliResult<Vec<f64>> {
        let s = Sampling {
            x_min: p.x_min.unwrap_or(x_min),
            x_max: p.x_max.unwrap_or(x_max),
            points: p.points.unwrap_or(points),
        };
        if !(s.x_min.is_finite() && s.x_max.is_finite()) || !(s.x_min < s.x_max) {
            return Err(CliError::Invalid(format!(
                "need x-min < x-max, got [{}, {}]",
                s.x_min, s.x_max
            )));
        }
        if s.points < 2 {
            return Err(CliError::Invalid("need at least 2 points".into()));
        }
        let step = (s.x_max - s.x_min) / (s.points - 1) as f64;
        Ok((0..s.points).map(|i| s.x_min + i as f64 * step).collect())
    }
}

fn table_output(columns: &[&str], rows: Vec<Vec<f64>>, format: Format) -> CliResult<RunOutput> {
    let body = match format {
        Format::Csv => {
            let text: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| format::sample(v)).collect())
                .collect();
            format::csv(columns, &text)
        }
        Format::Json => {
            let rows: Vec<Vec<serde_json::Value>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| finite_or_string(v)).collect())
                .collect();
            to_json(&json!({ "columns": columns, "rows": rows }))?
        }
    };
    Ok(RunOutput::body(body))
}

fn finite_or_string(v: f64) -> serde_json::Value {
    if v.is_finite() {
        json!(v)
    } else {
        json!(format::sample(v))
    }
}

/// Isotonic state on the whole line: the half-line solution at `x > 0`,
/// zero at the origin and the parity continuation at `x < 0`.
fn isotonic_value(n: usize, osc: &OscillatorParams, x: f64) -> CliResult<f64> {
    if x > 0.0 {
        return Ok(nonrel::wavefunction(n, osc, x)?);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let m =
        m_from_g(osc.g).ok_or_else(|| CliError::Invalid(format!("g = {} has no real m", osc.g)))?;
    match parity_extend(m, nonrel::wavefunction(n, osc, -x)?, x)? {
        ParityValue::Value(v) => Ok(v),
        ParityValue::NonNormalizable => Err(CliError::Invalid(format!(
            "m = {m} is not an integer; the state is not normalizable on x < 0"
        ))),
    }
}

/// Companion spinor at the origin: `x^(order - 1/2)` vanishes unless the
/// order is exactly 1/2, in which case the value is the limit at `0+`.
fn origin_companion(order: f64, eval: impl Fn(f64) -> isotonic::Result<f64>) -> CliResult<f64> {
    if order > 0.5 {
        Ok(0.0)
    } else {
        Ok(eval(f64::MIN_POSITIVE)?)
    }
}

pub fn wavefunction_samples(p: &Parameters) -> CliResult<(Vec<&'static str>, Vec<Vec<f64>>)> {
    let branch = p.branch.unwrap_or(BranchArg::Nonrel);
    let n = p.n.unwrap_or(0);
    let xs = Sampling::resolve(p, 0.0, 5.0, 501)?;
    match branch {
        BranchArg::Nonrel => {
            let osc = oscillator(p)?;
            let mut rows = Vec::with_capacity(xs.len());
            for &x in &xs {
                let mut row = vec![x, isotonic_value(n, &osc, x)?];
                if p.compare_harmonic {
                    row.push(harmonic_wavefunction(n, &osc, x)?);
                }
                rows.push(row);
            }
            let cols = if p.compare_harmonic {
                vec!["x", "isotonic", "harmonic"]
            } else {
                vec!["x", "isotonic"]
            };
            Ok((cols, rows))
        }
        BranchArg::Harmonic => {
            let osc = oscillator(p)?;
            let rows = xs
                .iter()
                .map(|&x| Ok(vec![x, harmonic_wavefunction(n, &osc, x)?]))
                .collect::<CliResult<Vec<_>>>()?;
            Ok((vec!["x", "harmonic"], rows))
        }
        BranchArg::Spin => {
            let d = spin_params(p)?;
            let e = solve_spin_energy(n, &d)?.value;
            let order = SpinDerived::at(&d, e)?.zeta;
            let rows = dirac_rows(&xs, |x| {
                if x == 0.0 {
                    return Ok((
                        0.0,
                        origin_companion(order, |t| spin_lower_spinor(n, &d, e, t))?,
                    ));
                }
                Ok((
                    spin_upper_spinor(n, &d, e, x)?,
                    spin_lower_spinor(n, &d, e, x)?,
                ))
            })?;
            Ok((vec!["x", "upper", "lower"], rows))
        }
        BranchArg::Pseudospin => {
            let d = pseudospin_params(p)?;
            let e = solve_pseudospin_energy(n, &d)?.value;
            let order = PseudospinDerived::at(&d, e)?.zeta_t;
            let rows = dirac_rows(&xs, |x| {
                if x == 0.0 {
                    return Ok((
                        origin_companion(order, |t| pseudospin_upper_spinor(n, &d, e, t))?,
                        0.0,
                    ));
                }
                Ok((
                    pseudospin_upper_spinor(n, &d, e, x)?,
                    pseudospin_lower_spinor(n, &d, e, x)?,
                ))
            })?;
            Ok((vec!["x", "upper", "lower"], rows))
        }
        BranchArg::KleinGordon => Err(CliError::Invalid(
            "no wavefunction for the klein-gordon branch; use spin with --cs 0".into(),
        )),
    }
}

fn dirac_rows(xs: &[f64], eval: impl Fn(f64) -> CliResult<(f64, f64)>) -> CliResult<Vec<Vec<f64>>> {
    xs.iter()
        .map(|&x| {
            if x < 0.0 {
                return Err(CliError::Invalid("spinors are defined for x >= 0".into()));
            }
            let (upper, lower) = eval(x)?;
            Ok(vec![x, upper, lower])
        })
        .collect()
}

pub fn wavefunction(p: &Parameters, format: Format) -> CliResult<RunOutput> {
    let (cols, rows) = wavefunction_samples(p)?;
    table_output(&cols, rows, format)
}

pub fn potential(p: &Parameters, format: Format) -> CliResult<RunOutput> {
    let osc = oscillator(p)?;
    let xs = Sampling::resolve(p, 0.2, 5.0, 481)?;
    let rows = xs
        .iter()
        .map(|&x| {
            let isotonic = if x == 0.0 {
                if osc.g == 0.0 {
                    0.0
                } else {
                    f64::INFINITY.copysign(osc.g)
                }
            } else {
                osc.isotonic_potential(x)
            };
            let mut row = vec![x, isotonic];
            if p.compare_harmonic {
                row.push(osc.harmonic_potential(x));
            }
            row
        })
        .collect();
    let cols = if p.compare_harmonic {
        vec!["x", "isotonic", "harmonic"]
    } else {
        vec!["x", "isotonic"]
    };
    table_output(&cols, rows, format)
}

/// One regenerated table cell.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub g: f64,
    pub coupling: f64,
    pub computed: Option<f64>,
    pub printed: f64,
    pub error: Option<String>,
}

impl TableCell {
    pub fn deviation(&self) -> f64 {
        self.computed
            .map_or(f64::INFINITY, |e| (e - self.printed).abs())
    }
}

pub fn regenerate(
    columns: &[ReferenceColumn],
    solve: impl Fn(&ReferenceColumn, usize) -> isotonic::Result<f64>,
) -> Vec<TableCell> {
    let mut cells = Vec::new();
    for n in 0..isotonic::reference::LEVELS {
        for col in columns {
            let result = solve(col, n);
            cells.push(TableCell {
                n,
                g: col.g,
                coupling: col.coupling,
                computed: result.as_ref().ok().copied(),
                printed: col.energies[n],
                error: result.err().map(|e| e.to_string()),
            });
        }
    }
    cells
}

pub fn spin_cells() -> Vec<TableCell> {
    regenerate(&SPIN_TABLE, |col, n| {
        Ok(solve_spin_energy(n, &col.spin_params())?.value)
    })
}

pub fn pseudospin_cells() -> Vec<TableCell> {
    regenerate(&PSEUDOSPIN_TABLE, |col, n| {
        Ok(solve_pseudospin_energy(n, &col.pseudospin_params())?.value)
    })
}

pub fn max_deviation(cells: &[TableCell]) -> f64 {
    cells.iter().map(TableCell::deviation).fold(0.0, f64::max)
}

fn cells_csv(cells: &[TableCell], coupling: &str) -> String {
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|c| {
            vec![
                c.n.to_string(),
                format!("{}", c.g),
                format!("{}", c.coupling),
                c.computed
                    .map_or_else(|| "error".to_string(), format::energy),
                format::energy(c.printed),
                c.computed
                    .map_or_else(|| "inf".to_string(), |_| format::small(c.deviation())),
            ]
        })
        .collect();
    format::csv(
        &["n", "g", coupling, "energy", "printed", "deviation"],
        &rows,
    )
}

pub fn reproduce_tables(format: Format) -> CliResult<RunOutput> {
    let spin = spin_cells();
    let pseudo = pseudospin_cells();
    let summary = [("table1", &spin), ("table2", &pseudo)].map(|(name, cells)| {
        let worst = max_deviation(cells);
        (name, cells.len(), worst, worst <= TABLE_TOLERANCE)
    });
    let passed = summary.iter().all(|s| s.3);

    let mut body = match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = summary
                .iter()
                .map(|(name, count, worst, ok)| {
                    vec![
                        name.to_string(),
                        count.to_string(),
                        format::small(*worst),
                        format::small(TABLE_TOLERANCE),
                        verdict(*ok).to_string(),
                    ]
                })
                .collect();
            format::csv(&["table", "cells", "max_deviation", "bound", "verdict"], &rows)
        }
        Format::Json => to_json(
            &summary
                .iter()
                .map(|(name, count, worst, ok)| {
                    json!({"table": name, "cells": count, "max_deviation": worst, "bound": TABLE_TOLERANCE, "pass": ok})
                })
                .collect::<Vec<_>>(),
        )?,
    };
    let failures = spin.iter().chain(&pseudo).filter(|c| c.error.is_some());
    for cell in failures.filter(|_| format == Format::Csv) {
        body.push_str(&format!(
            "# cell n={} g={} coupling={} failed: {}\n",
            cell.n,
            cell.g,
            cell.coupling,
            cell.error.as_deref().unwrap_or_default()
        ));
    }

    let mut output = RunOutput::body(body);
    output
        .files
        .insert(TABLE1_FILE.to_string(), cells_csv(&spin, "c_s"));
    output
        .files
        .insert(TABLE2_FILE.to_string(), cells_csv(&pseudo, "c_ps"));
    output.passed = passed;
    Ok(output)
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}
