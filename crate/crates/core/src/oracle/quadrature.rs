//! Adaptive composite Simpson quadrature.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 128;
const PANELS: usize = 64;
/// Truncation point of semi-infinite integrals, relative to the peak.
pub const TAIL_CUTOFF: f64 = 1e-18;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adapt(f: &dyn Fn(f64) -> f64, p: Panel, tol: f64, depth: u32) -> Result<f64> {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::ToleranceNotMet { tol });
    }
    let l = Panel {
        a: p.a,
        b: m,
        fa: p.fa,
        fm: flm,
        fb: p.fm,
        whole: left,
    };
    let r = Panel {
        a: m,
        b: p.b,
        fa: p.fm,
        fm: frm,
        fb: p.fb,
        whole: right,
    };
    Ok(adapt(f, l, 0.5 * tol, depth + 1)? + adapt(f, r, 0.5 * tol, depth + 1)?)
}

/// `int_a^b f(x) dx` to absolute tolerance `tol`.
pub fn quadrature(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "quadrature interval [{a}, {b}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "quadrature tolerance {tol}"
        )));
    }
    let width = (b - a) / PANELS as f64;
    let mut total = 0.0;
    for i in 0..PANELS {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == PANELS { b } else { lo + width };
        let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
        let panel = Panel {
            a: lo,
            b: hi,
            fa,
            fm,
            fb,
            whole: simpson(lo, hi, fa, fm, fb),
        };
        total += adapt(f, panel, tol / PANELS as f64, 0)?;
    }
    Ok(total)
}

/// Upper limit beyond which `|f|` stays below `TAIL_CUTOFF` of its peak.
pub fn tail_cutoff(f: &dyn Fn(f64) -> f64, a: f64) -> Result<f64> {
    const SAMPLES: usize = 256;
    let mut b = a + 1.0;
    for _ in 0..64 {
        let step = (b - a) / SAMPLES as f64;
        let values: Vec<f64> = (0..=SAMPLES)
            .map(|i| f(a + i as f64 * step).abs())
            .collect();
        let peak = values.iter().cloned().fold(0.0, f64::max);
        let tail = values[3 * SAMPLES / 4..]
            .iter()
            .cloned()
            .fold(0.0, f64::max);
        if peak > 0.0 && tail <= TAIL_CUTOFF * peak {
            return Ok(b);
        }
        b = a + 2.0 * (b - a);
    }
    Err(Error::InvalidParameter("integrand does not decay".into()))
}

/// `int_a^inf f(x) dx` for integrands with a decaying envelope, truncated
/// once the envelope drops below `TAIL_CUTOFF` of its peak.
pub fn quadrature_semi_infinite(f: &dyn Fn(f64) -> f64, a: f64, tol: f64) -> Result<f64> {
    let b = tail_cutoff(f, a)?;
    quadrature(f, a, b, tol)
}
