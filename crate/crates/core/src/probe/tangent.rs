//! Limit directions of a hypersurface at infinity, checked against the cone.

use num::complex::Complex64;

use super::sample::{complex_norm, sample_surface, Hypersurface};
use crate::cone::ConeResult;
use crate::error::{Error, Result};
use crate::poly::{FloatPolynomial, Polynomial};
use crate::rng;

/// Two unit directions belong to one complex line when `|<u, v>|` is at
/// least this.
pub const CLUSTER_THRESHOLD: f64 = 0.999;
/// Sampling band at scale `t` is `(t, BAND_WIDTH * t)`.
const BAND_WIDTH: f64 = 1.25;

/// A unit direction and its worst cone residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction {
    pub vector: Vec<Complex64>,
    pub residual: f64,
}

/// Directions sampled at one scale.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaleSample {
    pub scale: f64,
    pub directions: Vec<Direction>,
    /// Largest residual among `directions`.
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TangentDirections {
    pub scales: Vec<ScaleSample>,
    /// Clusters of the directions at the largest scale, one representative
    /// each, with the worst residual inside the cluster.
    pub clusters: Vec<Direction>,
}

impl TangentDirections {
    /// Max residual per scale, in scale order.
    pub fn residuals(&self) -> Vec<f64> {
        self.scales.iter().map(|s| s.max_residual).collect()
    }
}

/// Samples points of `f = 0` at norm about `t` for each scale, rescales them
/// to unit length and evaluates the cone generators there.
pub fn tangent_directions(
    f: &Polynomial,
    scales: &[f64],
    count: usize,
    seed: u64,
    cone: &ConeResult,
) -> Result<TangentDirections> {
    if scales.is_empty() || scales.windows(2).any(|w| w[0] >= w[1]) || scales[0] <= 0.0 {
        return Err(Error::Domain("scales must be positive and increasing".into()));
    }
    let surface = Hypersurface::new(f)?;
    let generators: Vec<FloatPolynomial> = cone.generators().iter().map(Polynomial::to_float).collect();
    let mut out = Vec::with_capacity(scales.len());
    for (i, &t) in scales.iter().enumerate() {
        let mut rng = rng::stream(rng::derive(seed, i as u64), rng::streams::SAMPLING);
        let cloud = sample_surface(&surface, (t, BAND_WIDTH * t), count, &mut rng)?;
        let directions: Vec<Direction> = (0..cloud.len())
            .map(|j| {
                let vector = normalize(&cloud.complex(j));
                let residual = generators.iter().map(|g| g.eval(&vector).norm()).fold(0.0, f64::max);
                Direction { vector, residual }
            })
            .collect();
        let max_residual = directions.iter().map(|d| d.residual).fold(0.0, f64::max);
        out.push(ScaleSample { scale: t, directions, max_residual });
    }
    let clusters = cluster(&out.last().expect("scales are non-empty").directions);
    Ok(TangentDirections { scales: out, clusters })
}

/// Unit vector on the same complex line, with the phase fixed so that its
/// largest coordinate is real and positive.
pub fn normalize(p: &[Complex64]) -> Vec<Complex64> {
    let norm = complex_norm(p);
    let pivot = p.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap_or_default();
    if norm == 0.0 || pivot.norm() == 0.0 {
        return p.to_vec();
    }
    let phase = pivot.conj() / pivot.norm();
    p.iter().map(|z| z * phase / norm).collect()
}

/// `|<u, v>|` for unit vectors: 1 exactly on a common complex line.
pub fn line_alignment(u: &[Complex64], v: &[Complex64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum::<Complex64>().norm()
}

/// Greedy clustering of unit directions by complex line.
pub fn cluster(directions: &[Direction]) -> Vec<Direction> {
    let mut clusters: Vec<Direction> = Vec::new();
    for d in directions {
        match clusters.iter_mut().find(|c| line_alignment(&c.vector, &d.vector) >= CLUSTER_THRESHOLD) {
            Some(c) => c.residual = c.residual.max(d.residual),
            None => clusters.push(d.clone()),
        }
    }
    clusters
}
