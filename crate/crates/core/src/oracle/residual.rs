use super::Grid;

/// Largest relative local residual of `f'' = c(x) f` over the interior grid
/// points:
///
/// ```text
/// max_i |f''_i - c_i f_i| / (|f''_i| + max_{|j-i|<=2} |c_j f_j| + eps)
/// ```
///
/// with `f''` from the five-point central stencil. Taking `|c f|` over the
/// stencil window keeps the ratio meaningful at turning points (`c = 0`) and
/// nodes (`f = 0`), where both terms vanish at a single point. `eps` is
/// machine epsilon times the largest term on the grid, so underflowing tails
/// do not dominate.
pub fn ode_residual(samples: &[f64], coefficient: &dyn Fn(f64) -> f64, grid: &Grid) -> f64 {
    assert_eq!(
        samples.len(),
        grid.n_points,
        "samples must live on the grid"
    );
    assert!(
        samples.len() >= 5,
        "five-point stencil needs at least 5 samples"
    );
    let h2 = grid.spacing() * grid.spacing();
    let terms: Vec<(f64, f64)> = (2..samples.len() - 2)
        .map(|i| {
            let f = &samples[i - 2..=i + 2];
            let second = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h2);
            (second, coefficient(grid.point(i)) * f[2])
        })
        .collect();
    let scale = terms
        .iter()
        .map(|(d2, cf)| d2.abs() + cf.abs())
        .fold(0.0, f64::max);
    let floor = f64::EPSILON * scale;
    let last = terms.len() - 1;
    terms
        .iter()
        .enumerate()
        .map(|(i, (d2, cf))| {
            let window = terms[i.saturating_sub(2)..=(i + 2).min(last)]
                .iter()
                .map(|(_, c)| c.abs())
                .fold(0.0, f64::max);
            (d2 - cf).abs() / (d2.abs() + window + floor)
        })
        .fold(0.0, f64::max)
}
