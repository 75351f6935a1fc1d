use isotonic::nonrel::{
    energy, harmonic_wavefunction, ode_coefficient, wavefunction, OscillatorParams,
};
use isotonic::oracle::{
    dirac_selfconsistent, fd_eigenvalues, loglog_slope, ode_residual, quadrature,
    quadrature_semi_infinite, Grid,
};
use isotonic::reference::{PSEUDOSPIN_TABLE, SPIN_TABLE, TABLE_TOLERANCE};
use isotonic::rel::{
    klein_gordon_energy, nonrel_limit_check, pseudospin_lower_spinor, pseudospin_map_check,
    pseudospin_ode_coefficient, solve_pseudospin_energy, solve_spin_energy, spin_ode_coefficient,
    spin_upper_spinor, DiracParams,
};
use isotonic::specfun::{hermite, kummer_1f1, laguerre, laguerre_binomial};
use serde::Serialize;

use crate::commands::{max_deviation, pseudospin_cells, spin_cells, verdict};
use crate::format;
use crate::manifest::{Format, RunOutput, Suite};
use crate::CliResult;

const GS: [f64; 3] = [0.5, 2.0, 6.0];
const QUAD_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

fn check(name: &str, value: f64, bound: f64) -> Check {
    Check {
        check: name.to_string(),
        value,
        bound,
        pass: value <= bound,
    }
}

pub fn run(suite: Suite, format: Format) -> CliResult<RunOutput> {
    let checks = checks(suite)?;
    let passed = checks.iter().all(|c| c.pass);
    let body = match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&checks)?;
            text.push('\n');
            text
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![
                        c.check.clone(),
                        format::small(c.value),
                        format::small(c.bound),
                        verdict(c.pass).into(),
                    ]
                })
                .collect();
            format::csv(&["check", "value", "bound", "verdict"], &rows)
        }
    };
    let mut output = RunOutput::body(body);
    output.passed = passed;
    Ok(output)
}

pub fn checks(suite: Suite) -> CliResult<Vec<Check>> {
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Identities,
            Suite::Orthonormality,
            Suite::Residuals,
            Suite::Oracle,
            Suite::Tables,
            Suite::Duality,
            Suite::Limits,
        ],
        one => vec![one],
    };
    let mut out = Vec::new();
    for s in suites {
        out.extend(match s {
            Suite::Identities => identities()?,
            Suite::Orthonormality => orthonormality()?,
            Suite::Residuals => residuals()?,
            Suite::Oracle => oracle()?,
            Suite::Tables => tables(),
            Suite::Duality => duality()?,
            Suite::Limits => limits()?,
            Suite::All => unreachable!(),
        });
    }
    Ok(out)
}

fn identities() -> CliResult<Vec<Check>> {
    let mut kummer = 0.0f64;
    let mut recurrence = 0.0f64;
    for &alpha in &[0.5, 1.5, 2.5] {
        for n in 0..=20usize {
            let binom = laguerre_binomial(n, alpha)?;
            for k in 0..100 {
                let z = 30.0 * k as f64 / 99.0;
                let direct = laguerre(n, alpha, z)?;
                let series = binom * kummer_1f1(-(n as f64), alpha + 1.0, z)?;
                kummer = kummer.max((direct - series).abs() / direct.abs().max(1.0));
                if n >= 1 {
                    let nf = n as f64;
                    let terms = [
                        (nf + 1.0) * laguerre(n + 1, alpha, z)?,
                        (2.0 * nf + alpha + 1.0 - z) * direct,
                        (nf + alpha) * laguerre(n - 1, alpha, z)?,
                    ];
                    let scale = terms.iter().fold(1.0f64, |a, t| a.max(t.abs()));
                    recurrence = recurrence.max((terms[0] - terms[1] + terms[2]).abs() / scale);
                }
            }
        }
    }
    let mut parity = 0.0f64;
    for n in 0..=30usize {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        for k in 1..=60 {
            let y = 0.1 * k as f64;
            let pos = hermite(n, y);
            parity =
                parity.max((hermite(n, -y) - sign * pos).abs() / pos.abs().max(f64::MIN_POSITIVE));
        }
    }
    Ok(vec![
        check("kummer_laguerre_identity", kummer, 1e-12),
        check("laguerre_recurrence_residual", recurrence, 1e-12),
        check("hermite_parity", parity, 1e-13),
    ])
}

fn half_line_integral(f: &dyn Fn(f64) -> isotonic::Result<f64>) -> CliResult<f64> {
    let integrand = |x: f64| {
        if x > 0.0 {
            f(x).unwrap_or(f64::NAN)
        } else {
            0.0
        }
    };
    Ok(quadrature_semi_infinite(&integrand, 0.0, QUAD_TOL)?)
}

fn orthonormality() -> CliResult<Vec<Check>> {
    let mut isotonic = 0.0f64;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        for n in 0..=6 {
            for m in 0..=n {
                let value =
                    half_line_integral(&|x| Ok(wavefunction(m, &p, x)? * wavefunction(n, &p, x)?))?;
                let expected = if m == n { 1.0 } else { 0.0 };
                isotonic = isotonic.max((value - expected).abs());
            }
        }
    }
    let free = OscillatorParams::natural(0.0);
    let mut harmonic = 0.0f64;
    for n in 0..=6 {
        let f = |x: f64| {
            harmonic_wavefunction(n, &free, x)
                .map(|v| v * v)
                .unwrap_or(f64::NAN)
        };
        harmonic = harmonic.max((quadrature(&f, -15.0, 15.0, QUAD_TOL)? - 1.0).abs());
    }
    let spin = DiracParams::spin(1.0, 1.0, 2.0, 0.0);
    let pseudo = DiracParams::pseudospin(1.0, 1.0, 2.0, 0.0);
    let mut upper = 0.0f64;
    let mut lower = 0.0f64;
    for n in 0..=4 {
        let e = solve_spin_energy(n, &spin)?.value;
        upper = upper.max(
            (half_line_integral(&|x| Ok(spin_upper_spinor(n, &spin, e, x)?.powi(2)))? - 1.0).abs(),
        );
        let e = solve_pseudospin_energy(n, &pseudo)?.value;
        lower = lower.max(
            (half_line_integral(&|x| Ok(pseudospin_lower_spinor(n, &pseudo, e, x)?.powi(2)))?
                - 1.0)
                .abs(),
        );
    }
    Ok(vec![
        check("isotonic_orthonormality", isotonic, 1e-9),
        check("harmonic_normalization", harmonic, 1e-9),
        check("spin_upper_normalization", upper, 1e-9),
        check("pseudospin_lower_normalization", lower, 1e-9),
    ])
}

fn sampled(grid: &Grid, f: impl Fn(f64) -> isotonic::Result<f64>) -> CliResult<Vec<f64>> {
    Ok(grid
        .points()
        .into_iter()
        .map(f)
        .collect::<isotonic::Result<Vec<_>>>()?)
}

fn residuals() -> CliResult<Vec<Check>> {
    let schrodinger_grid = Grid::new(0.2, 4.0, 1901)?;
    let mut schrodinger = 0.0f64;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        for n in 0..=5 {
            let e = energy(n, &p)?.value;
            let samples = sampled(&schrodinger_grid, |x| wavefunction(n, &p, x))?;
            schrodinger = schrodinger.max(ode_residual(
                &samples,
                &ode_coefficient(&p, e),
                &schrodinger_grid,
            ));
        }
    }
    let dirac_grid = Grid::new(0.3, 3.0, 1351)?;
    let mut spin = 0.0f64;
    for col in &SPIN_TABLE {
        let p = col.spin_params();
        for n in 0..=5 {
            let e = solve_spin_energy(n, &p)?.value;
            let samples = sampled(&dirac_grid, |x| spin_upper_spinor(n, &p, e, x))?;
            spin = spin.max(ode_residual(
                &samples,
                &spin_ode_coefficient(&p, e)?,
                &dirac_grid,
            ));
        }
    }
    let mut pseudo = 0.0f64;
    for col in &PSEUDOSPIN_TABLE {
        let p = col.pseudospin_params();
        for n in 0..=5 {
            let e = solve_pseudospin_energy(n, &p)?.value;
            let samples = sampled(&dirac_grid, |x| pseudospin_lower_spinor(n, &p, e, x))?;
            pseudo = pseudo.max(ode_residual(
                &samples,
                &pseudospin_ode_coefficient(&p, e)?,
                &dirac_grid,
            ));
        }
    }
    Ok(vec![
        check("schrodinger_ode_residual", schrodinger, 1e-6),
        check("spin_ode_residual", spin, 1e-6),
        check("pseudospin_ode_residual", pseudo, 1e-6),
    ])
}

fn oracle() -> CliResult<Vec<Check>> {
    let mut ratio = 0.0f64;
    let mut estimate = 0.0f64;
    let mut order = 0.0f64;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        let report = fd_eigenvalues(&|x| p.isotonic_potential(x), 0.5, &Grid::default(), 6)?;
        for n in 0..6 {
            let exact = energy(n, &p)?.value;
            ratio = ratio.max((report.eigenvalues[n] - exact).abs() / report.richardson_error[n]);
            estimate = estimate.max(report.richardson_error[n]);
            order = order.max((report.observed_order[n] - 2.0).abs());
        }
    }
    let mut selfconsistent = 0.0f64;
    for col in &SPIN_TABLE {
        let p = col.spin_params();
        for n in 0..=3 {
            let report = dirac_selfconsistent(n, &p)?;
            let solved = solve_spin_energy(n, &p)?.value;
            let tol = report.richardson_error[0].max(1e-6);
            selfconsistent = selfconsistent.max((report.eigenvalues[0] - solved).abs() / tol);
        }
    }
    Ok(vec![
        check("fd_agreement_over_error_estimate", ratio, 1.0),
        check("fd_richardson_error", estimate, 1e-5),
        check("fd_order_deviation", order, 0.2),
        check(
            "selfconsistent_agreement_over_tolerance",
            selfconsistent,
            1.0,
        ),
    ])
}

fn tables() -> Vec<Check> {
    vec![
        check(
            "table1_max_deviation",
            max_deviation(&spin_cells()),
            TABLE_TOLERANCE,
        ),
        check(
            "table2_max_deviation",
            max_deviation(&pseudospin_cells()),
            TABLE_TOLERANCE,
        ),
    ]
}

fn duality() -> CliResult<Vec<Check>> {
    let mut dual = 0.0f64;
    for &g in &[2.0, 6.0] {
        let spin = DiracParams::spin(1.0, 1.0, g, 2.0);
        let pseudo = DiracParams::pseudospin(1.0, 1.0, g, -2.0);
        for n in 0..=10 {
            let diff =
                solve_spin_energy(n, &spin)?.value - solve_pseudospin_energy(n, &pseudo)?.value;
            dual = dual.max((diff - 2.0).abs());
        }
    }
    let mut kg = 0.0f64;
    for col in SPIN_TABLE.iter().filter(|c| c.coupling == 0.0) {
        let p = col.spin_params();
        for n in 0..=10 {
            kg =
                kg.max((klein_gordon_energy(n, &p)?.value - solve_spin_energy(n, &p)?.value).abs());
        }
    }
    let mut map = 0.0f64;
    for col in &PSEUDOSPIN_TABLE {
        for n in [0, 3, 10] {
            map = map.max(pseudospin_map_check(n, &col.pseudospin_params())?);
        }
    }
    Ok(vec![
        check("spin_pseudospin_duality", dual, 1e-9),
        check("klein_gordon_consistency", kg, 1e-10),
        check("pseudospin_parameter_map", map, 1e-10),
    ])
}

fn limits() -> CliResult<Vec<Check>> {
    let cs = [10.0, 100.0, 1000.0];
    let p = DiracParams::spin(1.0, 1.0, 2.0, 0.0);
    let mut out = Vec::new();
    for n in 0..=2 {
        let dev = nonrel_limit_check(n, &p, &cs)?;
        out.push(check(
            &format!("nonrel_limit_slope_n{n}"),
            (loglog_slope(&cs, &dev) + 2.0).abs(),
            0.2,
        ));
    }
    let free = OscillatorParams::natural(0.0);
    let mut g_zero = 0.0f64;
    let mut spacing = 0.0f64;
    for n in 0..=20 {
        g_zero = g_zero.max((energy(n, &free)?.value - (2.0 * n as f64 + 1.5)).abs());
        for &g in &GS {
            let q = OscillatorParams::natural(g);
            let upper = energy(n + 1, &q)?.value;
            spacing = spacing.max(((upper - energy(n, &q)?.value) - 2.0).abs() / upper);
        }
    }
    out.push(check("g_zero_limit", g_zero, 0.0));
    out.push(check("equidistant_spacing", spacing, 4.0 * f64::EPSILON));
    Ok(out)
}
