//! Univariate complex root finding (Aberth–Ehrlich with Newton polishing).

use num::complex::Complex64;
use num::Zero;

const MAX_ITERATIONS: usize = 500;

/// Roots of `c[0] + c[1] z + ... + c[d] z^d`, with multiplicity.
///
/// Returns `None` when the leading coefficient vanishes relative to the
/// others or the iteration fails to converge.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    let mut c: Vec<Complex64> = coeffs.iter().map(|c| c / scale).collect();
    while c.len() > 1 && c.last().is_some_and(|l| l.norm() <= 1e-14) {
        c.pop();
    }
    if c.len() != coeffs.len() {
        // the leading coefficient is numerically zero: a root escaped to infinity
        return None;
    }
    let degree = c.len() - 1;
    if degree == 0 {
        return Some(Vec::new());
    }
    // zero roots come off exactly
    let zeros = c.iter().take_while(|x| x.is_zero()).count();
    let c = &c[zeros..];
    let d = c.len() - 1;
    let mut roots = vec![Complex64::zero(); zeros];
    if d == 0 {
        return Some(roots);
    }
    if d == 1 {
        roots.push(-c[0] / c[1]);
        return Some(roots);
    }
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let deriv: Vec<Complex64> = (1..=d).map(|i| monic[i] * i as f64).collect();

    // Fujiwara bound for the starting circle
    let radius = (0..d)
        .map(|i| monic[i].norm().powf(1.0 / (d - i) as f64))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| Complex64::from_polar(radius, (2.0 * std::f64::consts::PI * j as f64 + 0.4) / d as f64))
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut biggest = 0.0f64;
        for i in 0..d {
            let p = horner(&monic, z[i]);
            let dp = horner(&deriv, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            biggest = biggest.max(step.norm() / z[i].norm().max(1e-300));
        }
        if biggest < 1e-15 {
            converged = true;
            break;
        }
    }
    for r in &mut z {
        for _ in 0..2 {
            let dp = horner(&deriv, *r);
            if dp.norm() > 0.0 {
                let step = horner(&monic, *r) / dp;
                if step.is_finite() {
                    *r -= step;
                }
            }
        }
    }
    if !converged && z.iter().any(|r| !r.is_finite()) {
        return None;
    }
    roots.extend(z);
    Some(roots)
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sorted_re(mut r: Vec<Complex64>) -> Vec<f64> {
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        r.iter().map(|z| z.re).collect()
    }

    #[test]
    fn real_roots() {
        let r = polynomial_roots(&[c(-4.0), c(0.0), c(1.0)]).unwrap();
        let r = sorted_re(r);
        assert!((r[0] + 2.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
        let r = sorted_re(polynomial_roots(&[c(-6.0), c(11.0), c(-6.0), c(1.0)]).unwrap());
        for (x, e) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((x - e).abs() < 1e-10);
        }
    }

    #[test]
    fn complex_and_zero_roots() {
        let r = polynomial_roots(&[c(1.0), c(0.0), c(1.0)]).unwrap();
        assert!(r.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12 && z.re.abs() < 1e-12));
        let r = polynomial_roots(&[c(0.0), c(0.0), c(2.0)]).unwrap();
        assert_eq!(r, vec![Complex64::zero(); 2]);
    }

    #[test]
    fn degenerate_leading_coefficient() {
        assert!(polynomial_roots(&[c(1.0), c(1.0), c(0.0)]).is_none());
        assert!(polynomial_roots(&[c(0.0)]).is_none());
        assert_eq!(polynomial_roots(&[c(3.0)]).unwrap(), vec![]);
    }

    #[test]
    fn residuals_of_random_polynomial() {
        let coeffs: Vec<Complex64> =
            (0..8).map(|i| Complex64::new((i as f64 * 1.3).sin(), (i as f64 * 0.7).cos())).collect();
        let r = polynomial_roots(&coeffs).unwrap();
        assert_eq!(r.len(), 7);
        for z in r {
            assert!(horner(&coeffs, z).norm() < 1e-9 * (1.0 + z.norm()).powi(7));
        }
    }
}
