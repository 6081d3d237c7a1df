//! Built-in test ideals with known invariants.

use rand::Rng;

use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{vars, MonomialOrder, Polynomial, Rational};
use crate::rng;

/// Invariants known by hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dim: i64,
    pub degree: u64,
    pub reduced_cone_degree: u64,
}

#[derive(Clone, Debug)]
pub struct BatteryIdeal {
    pub name: String,
    pub ideal: Ideal,
    pub expected: Expected,
}

fn entry(name: &str, names: &[&str], gens: &[&str], dim: i64, degree: u64, reduced_cone_degree: u64) -> BatteryIdeal {
    BatteryIdeal {
        name: name.to_string(),
        ideal: Ideal::parse(names, gens).expect("battery ideals parse"),
        expected: Expected { dim, degree, reduced_cone_degree },
    }
}

/// The standard battery: curves, surfaces, reducible and non-reduced cases.
pub fn battery() -> Vec<BatteryIdeal> {
    let xy = ["x", "y"];
    let xyz = ["x", "y", "z"];
    vec![
        entry("parabola", &xy, &["y - x^2"], 1, 2, 1),
        entry("hyperbola", &xy, &["x*y - 1"], 1, 2, 2),
        entry("twisted cubic", &xyz, &["y - x^2", "z - x^3"], 1, 3, 1),
        entry("affine plane", &xyz, &["z - x - y"], 2, 1, 1),
        entry("space line", &xyz, &["y - 2*x - 1", "z + x - 3"], 1, 1, 1),
        entry("circle", &xy, &["x^2 + y^2 - 1"], 1, 2, 2),
        entry("fermat cubic", &xy, &["x^3 + y^3 - 1"], 1, 3, 3),
        entry("nodal cubic", &xy, &["y^2 - x^3 - x^2"], 1, 3, 1),
        entry("cuspidal cubic", &xy, &["y^2 - x^3"], 1, 3, 1),
        entry("cubic graph", &xy, &["y - x^3"], 1, 3, 1),
        entry("line pair", &xy, &["x*y"], 1, 2, 2),
        entry("double line", &xy, &["x^2"], 1, 2, 1),
        entry("sphere", &xyz, &["x^2 + y^2 + z^2 - 1"], 2, 2, 2),
        entry("planar parabola", &xyz, &["y - x^2", "z"], 1, 2, 1),
        entry("two points", &xy, &["x^2 - 1", "y"], 0, 2, 1),
    ]
}

/// Random affine subspaces of dimension 1 to 3 in four-space, each given by
/// a random rational parametrization with its parameters eliminated.
pub fn linear_battery(count: usize, seed: u64) -> Result<Vec<BatteryIdeal>> {
    let mut rng = rng::stream(seed, rng::streams::BATTERY);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.random_range(1..=3usize);
        let names: Vec<String> = (1..=d).map(|i| format!("t{i}")).chain((1..=4).map(|i| format!("x{i}"))).collect();
        let vs = vars(&names);
        let mut small = || Rational::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=4).into());
        let mut gens = Vec::with_capacity(4);
        for i in 0..4 {
            // x_i - (p_i + sum_j v_ij t_j)
            let mut g = Polynomial::variable(&vs, MonomialOrder::GrevLex, d + i)
                - Polynomial::constant(&vs, MonomialOrder::GrevLex, small());
            for j in 0..d {
                g = g - Polynomial::variable(&vs, MonomialOrder::GrevLex, j).scale(&small());
            }
            gens.push(g);
        }
        let ideal = Ideal::new(&vs, gens)?.eliminate(d)?;
        // a rank-deficient direction matrix gives a smaller subspace; keep
        // it anyway, labelled by the dimension it actually has
        let dim = 4 - ideal.groebner_basis(MonomialOrder::GrevLex)?.len() as i64;
        out.push(BatteryIdeal {
            name: format!("affine {dim}-space #{}", out.len() + 1),
            ideal,
            expected: Expected { dim, degree: 1, reduced_cone_degree: 1 },
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_battery_is_linear() {
        let b = linear_battery(4, 11).unwrap();
        assert_eq!(b.len(), 4);
        for e in &b {
            assert_eq!(e.ideal.nvars(), 4);
            let gb = e.ideal.groebner_basis(MonomialOrder::GrevLex).unwrap();
            assert!(gb.iter().all(|g| g.degree() == 1));
            assert!((1..=3).contains(&e.expected.dim));
        }
    }

    #[test]
    fn battery_is_large_enough() {
        let b = battery();
        assert!(b.len() >= 12);
        for name in ["parabola", "hyperbola", "twisted cubic", "fermat cubic", "nodal cubic", "line pair"] {
            assert!(b.iter().any(|e| e.name == name));
        }
    }
}
