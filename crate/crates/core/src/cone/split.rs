//! Linear coordinate changes `u = M x` that split `C^n = V1 ⊕ V2`, with `V1`
//! spanned by the first `k` new coordinates, and the admissibility test that
//! makes the projection onto `V1` proper on a variety.

use num::complex::Complex64;
use num::{One, ToPrimitive, Zero};
use rand::Rng;

use super::cone_at_infinity;
use crate::error::{Error, Result};
use crate::ideal::{count_standard_monomials, Ideal};
use crate::poly::{vars, MonomialOrder, Polynomial, Rational, Vars};
use crate::rng;

pub const DEFAULT_CHANGE_ATTEMPTS: usize = 32;

/// An invertible rational change of coordinates `u = M x` together with the
/// dimension `k` of `V1 = {u_{k+1} = ... = u_n = 0}`. The projection onto
/// `V1` keeps `u_1, ..., u_k`; its kernel `V2` is `{u_1 = ... = u_k = 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateSplit {
    k: usize,
    matrix: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
    names: Vars,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn identity_matrix(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Gauss–Jordan inverse; `None` when singular.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv = identity_matrix(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

impl CoordinateSplit {
    pub fn identity(vars: &Vars, k: usize) -> Self {
        let n = vars.len();
        CoordinateSplit { k, matrix: identity_matrix(n), inverse: identity_matrix(n), names: vars.clone() }
    }

    /// `u_i = x_{perm[i]}`; the new coordinates keep their old names.
    pub fn from_permutation(vars: &Vars, perm: &[usize], k: usize) -> Result<Self> {
        let n = vars.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Domain(format!("{perm:?} is not a permutation of {n} indices")));
        }
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (i, &p) in perm.iter().enumerate() {
            matrix[i][p] = Rational::one();
        }
        let inverse = invert(&matrix).expect("permutation matrices are invertible");
        let names: Vars = perm.iter().map(|&p| vars[p].clone()).collect();
        Ok(CoordinateSplit { k, matrix, inverse, names })
    }

    /// `V1` spanned by the named coordinate axes, in the given order.
    pub fn with_first(vars: &Vars, first: &[&str]) -> Result<Self> {
        let mut perm = Vec::new();
        for name in first {
            let i = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Context(format!("variable `{name}` not in context")))?;
            perm.push(i);
        }
        let rest: Vec<usize> = (0..vars.len()).filter(|i| !perm.contains(i)).collect();
        perm.extend(rest);
        CoordinateSplit::from_permutation(vars, &perm, first.len())
    }

    /// A general invertible change; new coordinates are named `u1, ..., un`.
    pub fn from_matrix(matrix: Vec<Vec<Rational>>, k: usize) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Domain("change of coordinates must be square".into()));
        }
        let inverse = invert(&matrix).ok_or_else(|| Error::Domain("singular change of coordinates".into()))?;
        let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        Ok(CoordinateSplit { k, matrix, inverse, names: vars(&names) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn inverse(&self) -> &[Vec<Rational>] {
        &self.inverse
    }

    /// Names of the new coordinates.
    pub fn names(&self) -> &Vars {
        &self.names
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix(self.n())
    }

    /// `f` written in the new coordinates: `g(u) = f(M^{-1} u)`.
    pub fn transform_polynomial(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.n() {
            return Err(Error::Context(format!("split of size {} applied to {} variables", self.n(), f.nvars())));
        }
        let order = f.order();
        let images: Vec<Polynomial> = self
            .inverse
            .iter()
            .map(|row| {
                Polynomial::from_terms(
                    &self.names,
                    order,
                    row.iter().enumerate().map(|(j, c)| (c.clone(), crate::poly::Monomial::variable(self.n(), j))),
                )
            })
            .collect();
        f.compose(&images)
    }

    pub fn transform_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.is_zero() {
            return Ok(Ideal::zero(&self.names).with_budget(ideal.budget()));
        }
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.transform_polynomial(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.names, gens)?.with_budget(ideal.budget()))
    }

    /// New coordinates `M z` of a complex point.
    pub fn apply(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(z).map(|(c, x)| x * c.to_f64().unwrap_or(f64::NAN)).sum())
            .collect()
    }

    /// Hermitian norms `(‖z'‖, ‖z''‖)` of the `V1` and `V2` components.
    pub fn component_norms(&self, z: &[Complex64]) -> (f64, f64) {
        let u = self.apply(z);
        let norm = |s: &[Complex64]| s.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        (norm(&u[..self.k]), norm(&u[self.k..]))
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        Err(Error::Domain(format!("split dimension k = {k} must satisfy 0 < k < {n}")))
    } else {
        Ok(())
    }
}

/// The cone ideal meets `V2` only at the origin: `cone + (u_1, ..., u_k)` has
/// a pure power of every variable among its leading monomials.
fn cone_avoids_kernel(cone: &Ideal, split: &CoordinateSplit) -> Result<bool> {
    let t = split.transform_ideal(cone)?;
    let mut gens = t.generators().to_vec();
    for i in 0..split.k() {
        gens.push(Polynomial::variable(split.names(), MonomialOrder::GrevLex, i));
    }
    let combined = Ideal::new(split.names(), gens)?.with_budget(cone.budget());
    let leads = combined.leading_monomials(MonomialOrder::GrevLex)?;
    Ok(count_standard_monomials(&leads, split.n()).is_some())
}

/// Whether the projection onto `V1` along `V2` is proper on `V(ideal)`:
/// the points at infinity of the closure and of `V2` are disjoint. Decided
/// exactly from the cone at infinity.
pub fn is_admissible_split(ideal: &Ideal, split: &CoordinateSplit) -> Result<bool> {
    check_k(ideal.nvars(), split.k())?;
    if split.n() != ideal.nvars() {
        return Err(Error::Context("split and ideal differ in dimension".into()));
    }
    let cone = cone_at_infinity(ideal)?;
    cone_avoids_kernel(&cone.cone_ideal, split)
}

/// [`random_linear_change_with`] with the default retry count.
pub fn random_linear_change(ideal: &Ideal, k: usize, seed: u64) -> Result<(Ideal, CoordinateSplit)> {
    random_linear_change_with(ideal, k, seed, DEFAULT_CHANGE_ATTEMPTS)
}

/// Finds an admissible split: first the identity, then `1 + E` with `E`
/// small random integers. Returns the ideal in the new coordinates and the
/// split. Deterministic for a fixed seed.
pub fn random_linear_change_with(
    ideal: &Ideal,
    k: usize,
    seed: u64,
    attempts: usize,
) -> Result<(Ideal, CoordinateSplit)> {
    let n = ideal.nvars();
    check_k(n, k)?;
    let cone = cone_at_infinity(ideal)?.cone_ideal;
    let mut rng = rng::stream(seed, rng::streams::LINEAR_CHANGE);
    for attempt in 0..attempts {
        let split = if attempt == 0 {
            CoordinateSplit::identity(ideal.vars(), k)
        } else {
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| int(rng.random_range(-3..=3) + i64::from(i == j))).collect())
                .collect();
            match CoordinateSplit::from_matrix(m, k) {
                Ok(s) => s,
                Err(_) => continue,
            }
        };
        if cone_avoids_kernel(&cone, &split)? {
            return Ok((split.transform_ideal(ideal)?, split));
        }
    }
    Err(Error::Genericity { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: [&str; 2] = ["x", "y"];

    fn ideal(v: &[&str], g: &[&str]) -> Ideal {
        Ideal::parse(v, g).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let vs = vars(&XY);
        let parabola = ideal(&XY, &["y - x^2"]);
        let x_axis = CoordinateSplit::identity(&vs, 1);
        let y_axis = CoordinateSplit::with_first(&vs, &["y"]).unwrap();
        assert!(!is_admissible_split(&parabola, &x_axis).unwrap());
        assert!(is_admissible_split(&parabola, &y_axis).unwrap());
        let hyperbola = ideal(&XY, &["x*y - 1"]);
        assert!(!is_admissible_split(&hyperbola, &x_axis).unwrap());
        assert!(!is_admissible_split(&hyperbola, &y_axis).unwrap());
        assert!(is_admissible_split(&parabola, &CoordinateSplit::identity(&vs, 0)).is_err());
        assert!(is_admissible_split(&parabola, &CoordinateSplit::identity(&vs, 2)).is_err());
    }

    #[test]
    fn random_change_examples() {
        let parabola = ideal(&XY, &["y - x^2"]);
        for seed in 0..5 {
            let (t, split) = random_linear_change(&parabola, 1, seed).unwrap();
            assert!(!split.is_identity());
            assert!(is_admissible_split(&parabola, &split).unwrap());
            assert_eq!(t.vars(), split.names());
        }
        let (_, split) = random_linear_change(&ideal(&XY, &["y"]), 1, 3).unwrap();
        assert!(split.is_identity());
        let (_, split) = random_linear_change(&ideal(&XY, &["x", "y"]), 1, 3).unwrap();
        assert!(split.is_identity());
        // deterministic per seed
        let a = random_linear_change(&parabola, 1, 11).unwrap().1;
        let b = random_linear_change(&parabola, 1, 11).unwrap().1;
        assert_eq!(a, b);
    }

    #[test]
    fn retries_can_be_exhausted() {
        let parabola = ideal(&XY, &["y - x^2"]);
        assert_eq!(
            random_linear_change_with(&parabola, 1, 0, 1).unwrap_err(),
            Error::Genericity { attempts: 1 }
        );
    }

    #[test]
    fn transform_round_trip() {
        let m = vec![vec![int(1), int(2)], vec![int(-1), int(3)]];
        let split = CoordinateSplit::from_matrix(m, 1).unwrap();
        let f = crate::poly::parse_polynomial("y - x^2", &XY).unwrap();
        let g = split.transform_polynomial(&f).unwrap();
        // g(Mx) = f(x) at a sample point
        let x = [int(3), int(-2)];
        let u: Vec<Rational> = split.matrix().iter().map(|r| &r[0] * &x[0] + &r[1] * &x[1]).collect();
        assert_eq!(g.eval(&u), f.eval(&x));
        assert!(CoordinateSplit::from_matrix(vec![vec![int(1), int(2)], vec![int(2), int(4)]], 1).is_err());
    }
}
