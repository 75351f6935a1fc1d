use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid on `[x_min, x_max]` approximating the half-line `(0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            x_min: 1e-4,
            x_max: 20.0,
            n_points: 8000,
        }
    }
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || !(x_min < x_max) {
            return Err(Error::InvalidParameter(format!(
                "grid bounds [{x_min}, {x_max}] must be finite and increasing"
            )));
        }
        if n_points < 100 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 100 points, got {n_points}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Same interval at half the spacing.
    pub fn halved(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }

    pub fn with_x_min(&self, x_min: f64) -> Result<Self> {
        Self::new(x_min, self.x_max, self.n_points)
    }

    pub fn with_points(&self, n_points: usize) -> Result<Self> {
        Self::new(self.x_min, self.x_max, n_points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halving_keeps_nodes() {
        let g = Grid::new(0.5, 2.5, 101).unwrap();
        let h = g.halved();
        assert_eq!(h.n_points, 201);
        assert!((h.spacing() * 2.0 - g.spacing()).abs() < 1e-15);
        assert_eq!(h.point(200), g.point(100));
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid::new(1.0, 1.0, 200).is_err());
        assert!(Grid::new(0.0, 1.0, 99).is_err());
        assert!(Grid::new(f64::NAN, 1.0, 200).is_err());
    }
}
