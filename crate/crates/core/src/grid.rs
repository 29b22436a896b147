//! Evaluation grids on (0, 1).

use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    Uniform,
    /// Uniform core plus clusters of 100 points per decade at distances
    /// 1e-12 .. 1e-3 from each end of (0,1), clamped to [lo, hi]. Claims
    /// whose margins degenerate at an endpoint register Uniform instead;
    /// the clamp keeps refinement from outrunning what the precision model
    /// can certify.
    LogEndpointRefined,
}

/// Grid on [lo, hi] strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub const DEFAULT_LO: f64 = 1e-6;
    pub const DEFAULT_HI: f64 = 1.0 - 1e-6;
    pub const DEFAULT_POINTS: usize = 10_000;

    pub fn new(lo: f64, hi: f64, points: usize, spacing: Spacing) -> Result<Self> {
        let g = GridSpec {
            lo,
            hi,
            points,
            spacing,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn default_refined() -> Self {
        GridSpec {
            lo: Self::DEFAULT_LO,
            hi: Self::DEFAULT_HI,
            points: Self::DEFAULT_POINTS,
            spacing: Spacing::LogEndpointRefined,
        }
    }

    pub fn default_uniform() -> Self {
        GridSpec {
            lo: Self::DEFAULT_LO,
            hi: Self::DEFAULT_HI,
            points: Self::DEFAULT_POINTS,
            spacing: Spacing::Uniform,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0 < self.lo && self.lo < self.hi && self.hi < 1.0) {
            return Err(Error::Domain(format!(
                "grid needs 0 < lo < hi < 1, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.points < 2 {
            return Err(Error::Domain("grid needs at least 2 points".into()));
        }
        Ok(())
    }

    /// Sorted, deduplicated evaluation points.
    pub fn points_vec(&self) -> Vec<f64> {
        let mut pts = Vec::with_capacity(self.points + 1400);
        let step = (self.hi - self.lo) / (self.points - 1) as f64;
        for i in 0..self.points {
            pts.push(self.lo + i as f64 * step);
        }
        if self.spacing == Spacing::LogEndpointRefined {
            // distances 10^(-12 + j/100) from each endpoint of (0,1)
            let mut j = 0;
            loop {
                let d = 10f64.powf(-12.0 + j as f64 / 100.0);
                if d > 1e-3 {
                    break;
                }
                if d >= self.lo && d <= self.hi {
                    pts.push(d);
                }
                let near_one = 1.0 - d;
                if near_one >= self.lo && near_one <= self.hi {
                    pts.push(near_one);
                }
                j += 1;
            }
        }
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_shape() {
        let g = GridSpec::new(0.1, 0.9, 5, Spacing::Uniform).unwrap();
        let pts = g.points_vec();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], 0.1);
        assert_eq!(pts[4], 0.9);
        assert!((pts[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn refined_grid_clusters_within_bounds() {
        let g = GridSpec::default_refined();
        let pts = g.points_vec();
        assert!(pts.len() > GridSpec::DEFAULT_POINTS);
        assert!(pts.first().copied().unwrap() >= g.lo);
        assert!(pts.last().copied().unwrap() <= g.hi);
        for w in pts.windows(2) {
            assert!(w[0] < w[1]);
        }
        // clusters actually reach down to the lo margin
        assert!(pts.iter().any(|&x| x < 2e-6));
        assert!(pts.iter().any(|&x| x > 1.0 - 2e-6));
    }

    #[test]
    fn invalid_grids_rejected() {
        assert!(GridSpec::new(0.0, 0.5, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.2, 0.1, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.1, 1.0, 10, Spacing::Uniform).is_err());
        assert!(GridSpec::new(0.1, 0.9, 1, Spacing::Uniform).is_err());
    }
}
