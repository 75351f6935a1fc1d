//! Sturm-sequence bisection for symmetric tridiagonal matrices.

const PIVOT_GUARD: f64 = 1e-300;

/// Number of eigenvalues strictly below `lambda`.
pub fn sturm_count(diagonal: &[f64], off_diag: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diagonal.iter().enumerate() {
        let coupling = if i == 0 {
            0.0
        } else {
            off_diag[i - 1] * off_diag[i - 1] / q
        };
        q = d - lambda - coupling;
        if q == 0.0 {
            q = -PIVOT_GUARD;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

pub fn gershgorin_bounds(diagonal: &[f64], off_diag: &[f64]) -> (f64, f64) {
    let n = diagonal.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off_diag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off_diag[i].abs() } else { 0.0 };
        lo = lo.min(diagonal[i] - left - right);
        hi = hi.max(diagonal[i] + left + right);
    }
    (lo, hi)
}

/// The `index`-th smallest eigenvalue (0-based).
pub fn kth_eigenvalue(diagonal: &[f64], off_diag: &[f64], index: usize) -> f64 {
    let (mut lo, mut hi) = gershgorin_bounds(diagonal, off_diag);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diagonal, off_diag, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
