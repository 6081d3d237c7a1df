//! Point clouds on complex hypersurfaces.

use num::complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::roots::polynomial_roots;
use crate::error::{Error, Result};
use crate::poly::{FloatPolynomial, Polynomial};
use crate::rng;

/// Default relative residual bound for sampled points.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-8;

/// A hypersurface `f = 0` prepared for numerical work: solved for its last
/// variable over chosen values of the others.
#[derive(Clone, Debug)]
pub struct Hypersurface {
    f: FloatPolynomial,
    gradient: Vec<FloatPolynomial>,
    degree: usize,
}

impl Hypersurface {
    /// Requires at least two variables and positive degree in the last one.
    pub fn new(f: &Polynomial) -> Result<Self> {
        let n = f.nvars();
        if n < 2 {
            return Err(Error::Domain("sampling needs at least two variables".into()));
        }
        let degree = f.degree_in(n - 1);
        if degree < 1 {
            return Err(Error::Domain(format!(
                "polynomial does not involve its last variable `{}`",
                f.vars()[n - 1]
            )));
        }
        Ok(Hypersurface {
            f: f.to_float(),
            gradient: (0..n).map(|i| f.derivative(i).to_float()).collect(),
            degree: degree as usize,
        })
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars
    }

    pub fn eval(&self, p: &[Complex64]) -> Complex64 {
        self.f.eval(p)
    }

    /// `|f(p)|` relative to the sum of absolute term values at `p`.
    pub fn relative_residual(&self, p: &[Complex64]) -> f64 {
        let m = self.f.magnitude(p);
        if m == 0.0 {
            0.0
        } else {
            self.f.eval(p).norm() / m
        }
    }

    /// Values of the last coordinate completing `head` to points of the
    /// hypersurface; `None` if the leading coefficient degenerates there.
    pub fn complete(&self, head: &[Complex64]) -> Option<Vec<Complex64>> {
        let last = self.nvars() - 1;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.degree + 1];
        for (c, e) in &self.f.terms {
            let mut v = Complex64::new(*c, 0.0);
            for (x, &k) in head.iter().zip(&e[..last]) {
                if k > 0 {
                    v *= x.powu(k);
                }
            }
            coeffs[e[last] as usize] += v;
        }
        polynomial_roots(&coeffs)
    }

    /// Upper estimate of the distance from `p` to the hypersurface: the
    /// smaller of the first-order estimate `|f| / |grad f|` and the distance
    /// to the nearest point with the same leading coordinates.
    pub fn distance_estimate(&self, p: &[Complex64]) -> f64 {
        let value = self.f.eval(p).norm();
        if value == 0.0 {
            return 0.0;
        }
        let grad: f64 = self.gradient.iter().map(|g| g.eval(p).norm_sqr()).sum::<f64>().sqrt();
        let first_order = if grad > 0.0 { value / grad } else { f64::INFINITY };
        let n = self.nvars();
        let vertical = self
            .complete(&p[..n - 1])
            .and_then(|roots| roots.iter().map(|z| (z - p[n - 1]).norm()).min_by(f64::total_cmp))
            .unwrap_or(f64::INFINITY);
        first_order.min(vertical)
    }
}

/// Sampled points of a variety, stored as real `2n`-vectors
/// `(re z_1, im z_1, ..., re z_n, im z_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    nvars: usize,
    points: Vec<Vec<f64>>,
    /// Norm band `(r_min, r_max)` every point lies in.
    pub band: (f64, f64),
    /// Largest relative residual permitted at the points.
    pub residual_tol: f64,
}

impl PointCloud {
    pub fn new(nvars: usize, band: (f64, f64), residual_tol: f64) -> Self {
        PointCloud { nvars, points: Vec::new(), band, residual_tol }
    }

    /// A cloud holding the given complex points; the band is their norm range.
    pub fn from_complex(nvars: usize, points: &[Vec<Complex64>]) -> Self {
        let mut cloud = PointCloud::new(nvars, (f64::INFINITY, 0.0), 0.0);
        for p in points {
            cloud.push(p);
        }
        if cloud.is_empty() {
            cloud.band = (0.0, 0.0);
        }
        cloud
    }

    pub fn push(&mut self, p: &[Complex64]) {
        assert_eq!(p.len(), self.nvars, "point has the wrong number of coordinates");
        let norm = complex_norm(p);
        self.band = (self.band.0.min(norm), self.band.1.max(norm));
        self.points.push(p.iter().flat_map(|z| [z.re, z.im]).collect());
    }

    /// Appends another cloud, widening the band to cover both.
    pub fn extend(&mut self, other: &PointCloud) {
        assert_eq!(self.nvars, other.nvars, "clouds live in different spaces");
        if !other.is_empty() {
            self.band = (self.band.0.min(other.band.0), self.band.1.max(other.band.1));
        }
        self.residual_tol = self.residual_tol.max(other.residual_tol);
        self.points.extend(other.points.iter().cloned());
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Real coordinates of point `i`.
    pub fn real(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn complex(&self, i: usize) -> Vec<Complex64> {
        self.points[i].chunks(2).map(|c| Complex64::new(c[0], c[1])).collect()
    }

    pub fn norm(&self, i: usize) -> f64 {
        self.points[i].iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(&self.points[i], &self.points[j])
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.points.iter().map(Vec::as_slice)
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

pub(crate) fn complex_norm(p: &[Complex64]) -> f64 {
    p.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Samples `count` points of `f = 0` with norms in `band`.
///
/// The leading `n - 1` coordinates are drawn in random complex directions
/// with log-uniform (occasionally ball-uniform) magnitudes, and the last
/// coordinate is solved for.
pub fn sample_hypersurface(f: &Polynomial, band: (f64, f64), count: usize, seed: u64) -> Result<PointCloud> {
    let surface = Hypersurface::new(f)?;
    let mut rng = rng::stream(seed, rng::streams::SAMPLING);
    sample_surface(&surface, band, count, &mut rng)
}

pub(crate) fn sample_surface(
    surface: &Hypersurface,
    band: (f64, f64),
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PointCloud> {
    let (lo, hi) = band;
    if count == 0 || !(lo >= 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain(format!("invalid sampling request: {count} points in band ({lo}, {hi})")));
    }
    let n = surface.nvars();
    let mut cloud = PointCloud::new(n, band, DEFAULT_RESIDUAL_TOL);
    let max_draws = 1000 * count + 10_000;
    let rho_min = 0.25 / hi.max(1.0);
    for _ in 0..max_draws {
        let head = draw_head(rng, n - 1, rho_min, hi);
        let Some(roots) = surface.complete(&head) else { continue };
        for z in roots {
            let mut p = head.clone();
            p.push(z);
            let norm = complex_norm(&p);
            if norm < lo || norm > hi || !norm.is_finite() {
                continue;
            }
            if surface.relative_residual(&p) > cloud.residual_tol {
                continue;
            }
            cloud.points.push(p.iter().flat_map(|z| [z.re, z.im]).collect());
            if cloud.len() == count {
                return Ok(cloud);
            }
        }
    }
    Err(Error::SamplingExhausted(format!(
        "found {} of {count} points in band ({lo}, {hi}) after {max_draws} draws",
        cloud.len()
    )))
}

fn draw_head(rng: &mut ChaCha8Rng, m: usize, rho_min: f64, rho_max: f64) -> Vec<Complex64> {
    let mut dir: Vec<Complex64> =
        (0..m).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
    let len = complex_norm(&dir).max(f64::MIN_POSITIVE);
    let u: f64 = rng.random();
    let rho = if rng.random_bool(0.25) {
        rho_max * u.powf(1.0 / (2 * m) as f64)
    } else {
        rho_min * (rho_max / rho_min).powf(u)
    };
    for z in &mut dir {
        *z *= rho / len;
    }
    dir
}
