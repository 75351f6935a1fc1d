use serde::{Deserialize, Serialize};

const BISECT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BracketedRoot {
    pub lo: f64,
    pub hi: f64,
    pub root: f64,
}

/// Every sign change of `f` on a uniform `steps`-interval grid over
/// `[lo, hi]`, refined by bisection to `1e-12`. Points where `f` is not
/// finite are skipped.
pub fn scan_roots(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> Vec<BracketedRoot> {
    assert!(
        lo < hi && steps >= 2,
        "scan_roots needs lo < hi and steps >= 2"
    );
    let width = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    let mut prev_x = lo;
    let mut prev_f = f(lo);
    for i in 1..=steps {
        let x = if i == steps {
            hi
        } else {
            lo + i as f64 * width
        };
        let fx = f(x);
        if prev_f.is_finite() && fx.is_finite() {
            if prev_f == 0.0 {
                roots.push(BracketedRoot {
                    lo: prev_x,
                    hi: prev_x,
                    root: prev_x,
                });
            } else if prev_f.signum() != fx.signum() && fx != 0.0 {
                roots.push(BracketedRoot {
                    lo: prev_x,
                    hi: x,
                    root: bisect(f, prev_x, x, prev_f),
                });
            }
        }
        prev_x = x;
        prev_f = fx;
    }
    if prev_f == 0.0 {
        roots.push(BracketedRoot {
            lo: hi,
            hi,
            root: hi,
        });
    }
    roots
}

fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        if b - a <= BISECT_TOL {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_roots() {
        assert!(scan_roots(&|x| x * x + 1.0, -5.0, 5.0, 100).is_empty());
    }

    #[test]
    fn finds_all_sign_changes() {
        let roots = scan_roots(&|x: f64| x.sin(), 0.5, 10.0, 97);
        assert_eq!(roots.len(), 3);
        for (r, k) in roots.iter().zip(1..) {
            assert!((r.root - k as f64 * std::f64::consts::PI).abs() < 1e-11);
            assert!(r.lo <= r.root && r.root <= r.hi);
        }
    }

    #[test]
    fn exact_grid_zero_counted_once() {
        let roots = scan_roots(&|x| x - 1.0, 0.0, 2.0, 4);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].root, 1.0);
    }
}
