//! Fitting regions `|z''| <= A (1 + |z'|)^B` around sampled points.

use super::sample::PointCloud;
use crate::cone::CoordinateSplit;
use crate::error::{Error, Result};

/// Relative slack when testing membership, absorbing rounding.
const CONTAINMENT_SLACK: f64 = 1e-9;

/// The region `|z''| <= A (1 + |z'|)^B` for a coordinate split `z = (z', z'')`.
#[derive(Clone, Debug)]
pub struct AlgebraicRegion {
    pub split: CoordinateSplit,
    pub a: f64,
    pub b: f64,
}

impl AlgebraicRegion {
    /// Bound on `|z''|` at a given `|z'|`.
    pub fn bound(&self, base_norm: f64) -> f64 {
        self.a * (1.0 + base_norm).powf(self.b)
    }

    pub fn contains(&self, cloud: &PointCloud, i: usize) -> bool {
        let (base, fiber) = self.split.component_norms(&cloud.complex(i));
        fiber <= self.bound(base) * (1.0 + CONTAINMENT_SLACK)
    }

    /// Fraction of cloud points inside the region.
    pub fn coverage(&self, cloud: &PointCloud) -> f64 {
        if cloud.is_empty() {
            return 1.0;
        }
        let inside = (0..cloud.len()).filter(|&i| self.contains(cloud, i)).count();
        inside as f64 / cloud.len() as f64
    }
}

/// Fits `B` as the least-squares slope of `log |z''|` against
/// `log(1 + |z'|)` (at least 1), then takes the smallest `A` covering the
/// cloud and doubles it.
pub fn region_fit(cloud: &PointCloud, split: &CoordinateSplit) -> Result<AlgebraicRegion> {
    if cloud.is_empty() {
        return Err(Error::Domain("cannot fit a region to an empty cloud".into()));
    }
    if split.n() != cloud.nvars() {
        return Err(Error::Context(format!(
            "split acts on {} coordinates, cloud has {}",
            split.n(),
            cloud.nvars()
        )));
    }
    let norms: Vec<(f64, f64)> = (0..cloud.len()).map(|i| split.component_norms(&cloud.complex(i))).collect();
    let logs: Vec<(f64, f64)> =
        norms.iter().filter(|(_, z2)| *z2 > 0.0).map(|&(z1, z2)| ((1.0 + z1).ln(), z2.ln())).collect();
    if logs.is_empty() {
        return Ok(AlgebraicRegion { split: split.clone(), a: 1.0, b: 1.0 });
    }
    let b = least_squares_slope(&logs).unwrap_or(1.0).max(1.0);
    let a = 2.0 * norms.iter().map(|&(z1, z2)| z2 / (1.0 + z1).powf(b)).fold(0.0, f64::max);
    Ok(AlgebraicRegion { split: split.clone(), a, b })
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
