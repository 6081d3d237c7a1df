//! Growth of inner versus Euclidean distance at increasing radii.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;

use super::graph::{NeighborGraph, DEFAULT_K};
use super::sample::{sample_surface, Hypersurface, PointCloud};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rng;

/// Qualitative reading of a ratio profile. The thresholds are heuristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Ratios stay within twice the first one.
    Bounded,
    /// Ratios climb by at least half the first one, without real dips.
    Growing,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Bounded => "bounded",
            Verdict::Growing => "growing",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bounded" => Ok(Verdict::Bounded),
            "growing" => Ok(Verdict::Growing),
            "inconclusive" => Ok(Verdict::Inconclusive),
            other => Err(Error::Domain(format!("unknown verdict `{other}`"))),
        }
    }
}

/// Smallest last/first ratio read as growth.
pub const GROWTH_FACTOR: f64 = 1.5;
/// Largest ratio, relative to the first, read as bounded.
pub const BOUNDED_FACTOR: f64 = 2.0;
/// A step may drop by this fraction and still count as monotone.
const MONOTONE_SLACK: f64 = 0.1;

/// Classifies a ratio sequence.
pub fn classify(ratios: &[f64]) -> Verdict {
    let (Some(&first), Some(&last)) = (ratios.first(), ratios.last()) else {
        return Verdict::Inconclusive;
    };
    let monotone = ratios.windows(2).all(|w| w[1] >= w[0] * (1.0 - MONOTONE_SLACK));
    if last >= GROWTH_FACTOR * first && monotone {
        Verdict::Growing
    } else if ratios.iter().all(|&r| r <= BOUNDED_FACTOR * first) {
        Verdict::Bounded
    } else {
        Verdict::Inconclusive
    }
}

#[derive(Clone, Debug)]
pub struct LneOptions {
    /// Increasing radii; radius `r` probes the band `(r, 2r)`.
    pub radii: Vec<f64>,
    /// Points sampled in each band (and again inside it).
    pub count: usize,
    /// Starting neighbor count.
    pub k: usize,
    /// Source points per band; each is paired with every other band point.
    pub sources: usize,
}

impl Default for LneOptions {
    fn default() -> Self {
        LneOptions { radii: vec![10.0, 20.0, 40.0, 80.0], count: 400, k: DEFAULT_K, sources: 40 }
    }
}

/// Max observed inner/Euclidean distance ratio per radius.
#[derive(Clone, Debug, PartialEq)]
pub struct LneProfile {
    pub radii: Vec<f64>,
    pub ratios: Vec<f64>,
    pub verdict: Verdict,
    /// Largest ratio seen at any radius.
    pub c_estimate: f64,
}

/// Probes whether `f = 0` looks Lipschitz normally embedded at infinity.
///
/// For each radius `r` the cloud holds `count` points in the band `(r, 2r)`
/// plus `count` points inside the ball of radius `r`, so that geodesics
/// between band points can pass through the interior. Ratios are taken
/// between random band points and all other band points.
pub fn lne_profile(f: &Polynomial, options: &LneOptions, seed: u64) -> Result<LneProfile> {
    let radii = &options.radii;
    if radii.len() < 3 || radii.windows(2).any(|w| w[0] >= w[1]) || radii[0] <= 0.0 {
        return Err(Error::Domain("need at least three increasing positive radii".into()));
    }
    let surface = Hypersurface::new(f)?;
    let mut ratios = Vec::with_capacity(radii.len());
    for (i, &r) in radii.iter().enumerate() {
        let sub = rng::derive(seed, i as u64);
        ratios.push(band_ratio(&surface, r, options, sub)?);
    }
    let c_estimate = ratios.iter().copied().fold(0.0, f64::max);
    Ok(LneProfile { radii: radii.clone(), verdict: classify(&ratios), ratios, c_estimate })
}

fn band_ratio(surface: &Hypersurface, r: f64, options: &LneOptions, seed: u64) -> Result<f64> {
    let mut rng = rng::stream(seed, rng::streams::SAMPLING);
    let mut cloud = sample_surface(surface, (r, 2.0 * r), options.count, &mut rng)?;
    let in_band = cloud.len();
    // the interior is best effort: some varieties keep away from the origin
    match sample_surface(surface, (0.0, r), options.count, &mut rng) {
        Ok(inner) => cloud.extend(&inner),
        Err(Error::SamplingExhausted(_)) => {}
        Err(e) => return Err(e),
    }
    let band: Vec<usize> = (0..in_band).collect();
    let graph = NeighborGraph::connected(&cloud, Some(surface), options.k, &band)?;
    let mut pick = rng::stream(seed, rng::streams::PAIRS);
    let sources = sample(&mut pick, in_band, options.sources.min(in_band));
    let mut best = 1.0f64;
    for s in sources {
        let dist = graph.distances_from(s);
        for (t, d) in dist.iter().enumerate().take(in_band) {
            let chord = cloud.distance(s, t);
            if t != s && chord > 0.0 {
                best = best.max(d / chord);
            }
        }
    }
    Ok(best)
}

/// Ratios of graph geodesic to chord over all pairs among `nodes`.
pub fn pair_ratios(cloud: &PointCloud, graph: &NeighborGraph, nodes: &[usize]) -> Vec<f64> {
    let mut out = Vec::new();
    for &s in nodes {
        let dist = graph.distances_from(s);
        for &t in nodes {
            let chord = cloud.distance(s, t);
            if t > s && chord > 0.0 {
                out.push(dist[t] / chord);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert_eq!(classify(&[3.0, 4.5, 6.5, 9.0]), Verdict::Growing);
        assert_eq!(classify(&[1.4, 1.5, 1.4, 1.6]), Verdict::Bounded);
        assert_eq!(classify(&[1.0, 3.0, 1.0, 1.2]), Verdict::Inconclusive);
        assert_eq!(classify(&[]), Verdict::Inconclusive);
        assert_eq!("growing".parse::<Verdict>().unwrap(), Verdict::Growing);
    }

    #[test]
    fn rejects_bad_radii() {
        let f = crate::poly::parse_polynomial("y", &["x", "y"]).unwrap();
        let o = LneOptions { radii: vec![10.0, 5.0, 20.0], ..Default::default() };
        assert!(lne_profile(&f, &o, 0).is_err());
    }
}
