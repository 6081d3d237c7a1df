//! Generic fibers of admissible projections. Over a generic base point the
//! fiber of a finite projection has as many points as the variety has
//! degree; counted with multiplicity it recovers the scheme degree, counted
//! as a set the degree of the underlying reduced variety.

use rand::Rng;

use super::dim_degree;
use crate::cone::{random_linear_change, CoordinateSplit};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Rational, UniPoly, Vars};
use crate::rng;

/// Knobs for fiber sampling.
#[derive(Clone, Debug)]
pub struct FiberOptions {
    /// Successful fibers examined per call.
    pub trials: usize,
    /// Base points drawn before giving up on finding `trials` generic ones.
    pub max_attempts: usize,
    /// Base point coordinates are integers in `[-height, height]`.
    pub height: i64,
}

impl Default for FiberOptions {
    fn default() -> Self {
        FiberOptions { trials: 5, max_attempts: 50, height: 10_000 }
    }
}

/// The fiber of `split`'s projection over `point`: the ideal, in the new
/// coordinates `u_{k+1}, ..., u_n`, obtained by fixing `u_1..u_k`.
///
/// `ideal` is given in its original coordinates. Fails with
/// [`Error::NonGenericPoint`] when the fiber is not finite.
pub fn generic_fiber(ideal: &Ideal, split: &CoordinateSplit, point: &[Rational]) -> Result<Ideal> {
    let k = split.k();
    if point.len() != k {
        return Err(Error::Domain(format!("base point has {} coordinates, expected {k}", point.len())));
    }
    let moved = split.transform_ideal(ideal)?;
    fiber_of_transformed(&moved, point)
}

fn fiber_of_transformed(moved: &Ideal, point: &[Rational]) -> Result<Ideal> {
    let k = point.len();
    let fiber_vars: Vars = moved.vars()[k..].to_vec().into();
    let gens: Vec<Polynomial> = moved
        .generators()
        .iter()
        .map(|g| {
            let mut g = g.clone();
            for c in point {
                g = g.specialize(0, c);
            }
            g.with_vars(&fiber_vars)
        })
        .collect();
    let fiber = if gens.is_empty() { Ideal::zero(&fiber_vars) } else { Ideal::new(&fiber_vars, gens)? }
        .with_budget(moved.budget());
    if !fiber.is_zero_dimensional()? {
        return Err(Error::NonGenericPoint);
    }
    Ok(fiber)
}

/// Number of distinct solutions of a zero-dimensional ideal.
///
/// Adds the squarefree part of each variable's univariate eliminant, which
/// yields the radical, then counts standard monomials. Exact throughout.
pub fn distinct_point_count(ideal: &Ideal) -> Result<usize> {
    if ideal.is_unit()? {
        return Ok(0);
    }
    if !ideal.is_zero_dimensional()? {
        return Err(Error::NotZeroDimensional);
    }
    let m = ideal.nvars();
    if m == 0 {
        return Ok(1);
    }
    let mut gens = ideal.groebner_basis(MonomialOrder::GrevLex)?.to_vec();
    for i in 0..m {
        let eliminant = univariate_eliminant(ideal, i)?;
        let sqf = eliminant.squarefree_part();
        gens.push(sqf.to_polynomial(ideal.vars(), MonomialOrder::GrevLex, i));
    }
    Ideal::new(ideal.vars(), gens)?.with_budget(ideal.budget()).quotient_dimension()
}

/// Generator of `ideal ∩ Q[x_i]`.
fn univariate_eliminant(ideal: &Ideal, i: usize) -> Result<UniPoly> {
    let m = ideal.nvars();
    if m == 1 {
        let gb = ideal.groebner_basis(MonomialOrder::GrevLex)?;
        return UniPoly::from_polynomial(&gb[0], 0);
    }
    let mut perm: Vec<usize> = (0..m).filter(|&j| j != i).collect();
    perm.push(i);
    let split = CoordinateSplit::from_permutation(ideal.vars(), &perm, m - 1)?;
    let moved = split.transform_ideal(ideal)?;
    let elim = moved.eliminate(m - 1)?;
    let gb = elim.groebner_basis(MonomialOrder::GrevLex)?;
    match gb.as_slice() {
        [g] => UniPoly::from_polynomial(g, 0),
        _ => Err(Error::NotZeroDimensional),
    }
}

/// Admissible split plus generic fibers of `ideal` over random base points.
pub struct FiberSample {
    pub split: Option<CoordinateSplit>,
    pub fibers: Vec<Ideal>,
}

/// Draws `options.trials` generic fibers of a random admissible projection
/// of `V(ideal)` onto a space of dimension `dim V(ideal)`.
pub fn sample_fibers(ideal: &Ideal, seed: u64, options: &FiberOptions) -> Result<FiberSample> {
    ideal.ensure_proper()?;
    let n = ideal.nvars();
    let dim = dim_degree(ideal)?.dim as usize;
    if dim == 0 {
        // the variety is its own fiber over a point
        return Ok(FiberSample { split: None, fibers: vec![ideal.clone()] });
    }
    if dim == n {
        let point = Ideal::zero(&Vars::from(Vec::<String>::new()));
        return Ok(FiberSample { split: None, fibers: vec![point] });
    }
    let (moved, split) = random_linear_change(ideal, dim, seed)?;
    let mut rng = rng::stream(seed, rng::streams::BASE_POINTS);
    let mut fibers = Vec::with_capacity(options.trials);
    for _ in 0..options.max_attempts {
        if fibers.len() == options.trials {
            break;
        }
        let point: Vec<Rational> = (0..dim)
            .map(|_| Rational::from_integer(rng.random_range(-options.height..=options.height).into()))
            .collect();
        match fiber_of_transformed(&moved, &point) {
            Ok(f) => fibers.push(f),
            Err(Error::NonGenericPoint) => continue,
            Err(e) => return Err(e),
        }
    }
    if fibers.is_empty() {
        return Err(Error::Genericity { attempts: options.max_attempts });
    }
    Ok(FiberSample { split: Some(split), fibers })
}

/// Degree of the reduced variety: the largest number of distinct points in
/// a generic fiber (special fibers only lose points).
pub fn reduced_degree(ideal: &Ideal, seed: u64) -> Result<usize> {
    reduced_degree_with(ideal, seed, &FiberOptions::default())
}

pub fn reduced_degree_with(ideal: &Ideal, seed: u64, options: &FiberOptions) -> Result<usize> {
    let sample = sample_fibers(ideal, seed, options)?;
    let mut best = 0;
    for f in &sample.fibers {
        best = best.max(count_points(f)?);
    }
    Ok(best)
}

fn count_points(fiber: &Ideal) -> Result<usize> {
    if fiber.nvars() == 0 {
        return Ok(if fiber.is_zero() { 1 } else { 0 });
    }
    distinct_point_count(fiber)
}

/// Generic fiber length: solutions counted with multiplicity, the smallest
/// value over the sampled fibers (length can only jump up at special
/// points of a finite map).
pub fn fiber_multiplicity(ideal: &Ideal, seed: u64, options: &FiberOptions) -> Result<usize> {
    let sample = sample_fibers(ideal, seed, options)?;
    let mut best = usize::MAX;
    for f in &sample.fibers {
        let len = if f.nvars() == 0 { 1 } else { f.quotient_dimension()? };
        best = best.min(len);
    }
    Ok(best)
}
