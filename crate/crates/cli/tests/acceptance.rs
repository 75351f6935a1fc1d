//! Acceptance gate: runs every criterion at its stated tolerance and prints
//! one line per criterion. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use isotonic::nonrel::{energy, ode_coefficient, wavefunction, OscillatorParams};
use isotonic::oracle::{
    dirac_selfconsistent, fd_eigenvalues, loglog_slope, ode_residual, quadrature_semi_infinite,
    Grid,
};
use isotonic::reference::{PSEUDOSPIN_TABLE, SPIN_TABLE, TABLE_TOLERANCE};
use isotonic::rel::{
    klein_gordon_energy, nonrel_limit_check, pseudospin_lower_spinor, pseudospin_ode_coefficient,
    solve_pseudospin_energy, solve_spin_energy, spin_ode_coefficient, spin_upper_spinor,
    DiracParams,
};
use isotonic::specfun::{kummer_1f1, laguerre, laguerre_binomial};
use isotonic::Result;

const GS: [f64; 3] = [0.5, 2.0, 6.0];

struct Outcome {
    pass: bool,
    summary: String,
    time_limit: Option<Duration>,
}

impl Outcome {
    fn bounded(name: &str, value: f64, bound: f64) -> Self {
        Self {
            pass: value <= bound,
            summary: format!("{name} {value:.3e} <= {bound:.1e}"),
            time_limit: None,
        }
    }

    fn all(parts: Vec<Outcome>) -> Self {
        Self {
            pass: parts.iter().all(|o| o.pass),
            summary: parts
                .iter()
                .map(|o| o.summary.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            time_limit: None,
        }
    }

    fn within(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

fn table_one() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut cells = 0;
    for col in &SPIN_TABLE {
        for (n, &printed) in col.energies.iter().enumerate() {
            worst = worst.max((solve_spin_energy(n, &col.spin_params())?.value - printed).abs());
            cells += 1;
        }
    }
    Ok(Outcome::bounded(
        &format!("{cells} cells, max deviation"),
        worst,
        TABLE_TOLERANCE,
    )
    .within(Duration::from_secs(1)))
}

fn table_two() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut cells = 0;
    for col in &PSEUDOSPIN_TABLE {
        for (n, &printed) in col.energies.iter().enumerate() {
            worst = worst
                .max((solve_pseudospin_energy(n, &col.pseudospin_params())?.value - printed).abs());
            cells += 1;
        }
    }
    Ok(Outcome::bounded(
        &format!("{cells} cells, max deviation"),
        worst,
        TABLE_TOLERANCE,
    )
    .within(Duration::from_secs(1)))
}

fn finite_difference() -> Result<Outcome> {
    let mut excess: f64 = f64::NEG_INFINITY;
    let mut worst_error: f64 = 0.0;
    let mut worst_order: f64 = 0.0;
    let (mut lowest_order, mut highest_order) = (f64::INFINITY, f64::NEG_INFINITY);
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        let potential = |x: f64| p.isotonic_potential(x);
        let report = fd_eigenvalues(&potential, 0.5, &Grid::default(), 6)?;
        for n in 0..6 {
            let err = report.richardson_error[n];
            excess = excess.max((report.eigenvalues[n] - energy(n, &p)?.value).abs() - err);
            worst_error = worst_error.max(err);
            let order = report.observed_order[n];
            worst_order = worst_order.max((order - 2.0).abs());
            lowest_order = lowest_order.min(order);
            highest_order = highest_order.max(order);
        }
    }
    let mut outcome = Outcome::all(vec![
        Outcome::bounded("|E_fd - E| - err", excess, 0.0),
        Outcome::bounded("err", worst_error, 1e-5),
        Outcome::bounded("|order - 2|", worst_order, 0.2),
    ]);
    outcome.summary += &format!(" (orders {lowest_order:.3}..{highest_order:.3})");
    Ok(outcome.within(Duration::from_secs(10)))
}

fn self_consistent() -> Result<Outcome> {
    let mut worst_ratio: f64 = 0.0;
    let mut cells = 0;
    for col in SPIN_TABLE.iter() {
        let p = col.spin_params();
        for n in 0..=3 {
            let report = dirac_selfconsistent(n, &p)?;
            let tol = report.richardson_error[0].max(1e-6);
            let gap = (report.eigenvalues[0] - solve_spin_energy(n, &p)?.value).abs();
            worst_ratio = worst_ratio.max(gap / tol);
            cells += 1;
        }
    }
    Ok(Outcome::bounded(
        &format!("{cells} cells, max |gap| / tolerance"),
        worst_ratio,
        1.0,
    )
    .within(Duration::from_secs(60)))
}

fn equidistance() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        for n in 0..20 {
            let lower = energy(n, &p)?.value;
            let upper = energy(n + 1, &p)?.value;
            let ulps = ((upper - lower) - 2.0 * p.hbar * p.omega).abs() / (f64::EPSILON * upper);
            worst = worst.max(ulps);
        }
    }
    Ok(Outcome::bounded(
        "|dE - 2 hbar omega| in units of eps E",
        worst,
        4.0,
    ))
}

fn harmonic_limit() -> Result<Outcome> {
    let p = OscillatorParams::natural(0.0);
    let mut worst: f64 = 0.0;
    for n in 0..=20 {
        worst = worst.max((energy(n, &p)?.value - (2.0 * n as f64 + 1.5)).abs());
    }
    Ok(Outcome::bounded("|E - (2n + 3/2)|", worst, 0.0))
}

fn klein_gordon() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for col in SPIN_TABLE.iter().filter(|c| c.coupling == 0.0) {
        let p = col.spin_params();
        for n in 0..col.energies.len() {
            worst = worst
                .max((klein_gordon_energy(n, &p)?.value - solve_spin_energy(n, &p)?.value).abs());
        }
    }
    Ok(Outcome::bounded("|E_kg - E_spin|", worst, 1e-10))
}

fn duality() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for &g in &[2.0, 6.0] {
        let spin = DiracParams::spin(1.0, 1.0, g, 2.0);
        let pseudospin = DiracParams::pseudospin(1.0, 1.0, g, -2.0);
        for n in 0..=10 {
            let shift =
                solve_spin_energy(n, &spin)?.value - solve_pseudospin_energy(n, &pseudospin)?.value;
            worst = worst.max((shift - 2.0 * spin.rest_energy()).abs());
        }
    }
    Ok(Outcome::bounded(
        "|E_spin - E_pseudospin - 2Mc^2|",
        worst,
        1e-9,
    ))
}

fn nonrelativistic_limit() -> Result<Outcome> {
    let speeds = [10.0, 100.0, 1000.0];
    let p = DiracParams::spin(1.0, 1.0, 2.0, 0.0);
    let mut worst: f64 = 0.0;
    let mut slopes = Vec::new();
    for n in 0..=2 {
        let slope = loglog_slope(&speeds, &nonrel_limit_check(n, &p, &speeds)?);
        worst = worst.max((slope + 2.0).abs());
        slopes.push(format!("{slope:.3}"));
    }
    let mut outcome = Outcome::bounded("|slope + 2|", worst, 0.2);
    outcome.summary += &format!(" (slopes {})", slopes.join(", "));
    Ok(outcome)
}

fn function_space() -> Result<Outcome> {
    let mut orthonormality: f64 = 0.0;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        for n in 0..=6 {
            for m in 0..=n {
                let product = |x: f64| {
                    if x > 0.0 {
                        wavefunction(m, &p, x).unwrap() * wavefunction(n, &p, x).unwrap()
                    } else {
                        0.0
                    }
                };
                let expected = if m == n { 1.0 } else { 0.0 };
                orthonormality = orthonormality
                    .max((quadrature_semi_infinite(&product, 0.0, 1e-13)? - expected).abs());
            }
        }
    }

    let mut residual: f64 = 0.0;
    let grid = Grid::new(0.2, 4.0, 1901)?;
    for &g in &GS {
        let p = OscillatorParams::natural(g);
        for n in 0..=5 {
            let e = energy(n, &p)?.value;
            let samples = grid
                .points()
                .iter()
                .map(|&x| wavefunction(n, &p, x))
                .collect::<Result<Vec<_>>>()?;
            residual = residual.max(ode_residual(&samples, &ode_coefficient(&p, e), &grid));
        }
    }
    let grid = Grid::new(0.3, 3.0, 1351)?;
    for col in &SPIN_TABLE {
        let p = col.spin_params();
        for n in 0..=5 {
            let e = solve_spin_energy(n, &p)?.value;
            let samples = grid
                .points()
                .iter()
                .map(|&x| spin_upper_spinor(n, &p, e, x))
                .collect::<Result<Vec<_>>>()?;
            residual = residual.max(ode_residual(&samples, &spin_ode_coefficient(&p, e)?, &grid));
        }
    }
    for col in &PSEUDOSPIN_TABLE {
        let p = col.pseudospin_params();
        for n in 0..=5 {
            let e = solve_pseudospin_energy(n, &p)?.value;
            let samples = grid
                .points()
                .iter()
                .map(|&x| pseudospin_lower_spinor(n, &p, e, x))
                .collect::<Result<Vec<_>>>()?;
            residual = residual.max(ode_residual(
                &samples,
                &pseudospin_ode_coefficient(&p, e)?,
                &grid,
            ));
        }
    }

    let mut identity: f64 = 0.0;
    for &alpha in &[0.5, 1.5, 2.5] {
        for n in 0..=20 {
            let binom = laguerre_binomial(n, alpha)?;
            for k in 0..100 {
                let z = 30.0 * k as f64 / 99.0;
                let direct = laguerre(n, alpha, z)?;
                let series = binom * kummer_1f1(-(n as f64), alpha + 1.0, z)?;
                identity = identity.max((direct - series).abs() / direct.abs().max(1.0));
            }
        }
    }

    Ok(Outcome::all(vec![
        Outcome::bounded("orthonormality", orthonormality, 1e-9),
        Outcome::bounded("ODE residual", residual, 1e-6),
        Outcome::bounded("Kummer-Laguerre", identity, 1e-12),
    ]))
}

fn reproduce_tables_once() -> std::io::Result<Vec<(String, Vec<u8>)>> {
    let dir = tempfile::tempdir()?;
    let out = Command::new(env!("CARGO_BIN_EXE_isotonic"))
        .args(["reproduce-tables", "--out"])
        .arg(dir.path())
        .output()?;
    let mut files = vec![("stdout".to_string(), out.stdout)];
    for name in [isotonic_cli::TABLE1_FILE, isotonic_cli::TABLE2_FILE] {
        files.push((name.to_string(), std::fs::read(dir.path().join(name))?));
    }
    Ok(files)
}

fn determinism() -> Outcome {
    match (reproduce_tables_once(), reproduce_tables_once()) {
        (Ok(first), Ok(second)) => {
            let identical = first == second && first.iter().all(|(_, bytes)| !bytes.is_empty());
            let bytes: usize = first.iter().map(|(_, b)| b.len()).sum();
            Outcome {
                pass: identical,
                summary: format!(
                    "two runs, {bytes} bytes, {}",
                    if identical {
                        "byte-identical"
                    } else {
                        "outputs differ"
                    }
                ),
                time_limit: None,
            }
        }
        (Err(e), _) | (_, Err(e)) => Outcome {
            pass: false,
            summary: format!("run failed: {e}"),
            time_limit: None,
        },
    }
}

type Criterion = Box<dyn Fn() -> Result<Outcome>>;

fn main() -> ExitCode {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("Table 1 spin-symmetric energies", Box::new(table_one)),
        ("Table 2 pseudospin energies", Box::new(table_two)),
        (
            "finite-difference oracle vs closed form",
            Box::new(finite_difference),
        ),
        ("self-consistent Dirac oracle", Box::new(self_consistent)),
        ("equidistant spectrum", Box::new(equidistance)),
        ("zero-barrier harmonic limit", Box::new(harmonic_limit)),
        ("Klein-Gordon consistency", Box::new(klein_gordon)),
        ("spin/pseudospin duality", Box::new(duality)),
        ("nonrelativistic limit", Box::new(nonrelativistic_limit)),
        ("function-space properties", Box::new(function_space)),
        (
            "reproduce-tables determinism",
            Box::new(|| Ok(determinism())),
        ),
    ];

    let mut failures = 0;
    for (index, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (pass, summary) = match outcome {
            Ok(o) => {
                let on_time = o.time_limit.is_none_or(|limit| elapsed <= limit);
                let timing = match o.time_limit {
                    Some(limit) => format!(
                        "{:.2} s (limit {} s)",
                        elapsed.as_secs_f64(),
                        limit.as_secs()
                    ),
                    None => format!("{:.2} s", elapsed.as_secs_f64()),
                };
                (o.pass && on_time, format!("{}; {timing}", o.summary))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {:>2}: {name}: {summary}",
            if pass { "PASS" } else { "FAIL" },
            index + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
