//! The tangent cone at infinity of an affine variety, its projective closure
//! and the closure's part on the hyperplane at infinity.
//!
//! The cone is cut out by the highest forms of *all* elements of the ideal,
//! not just of the given generators. Under a graded order the highest forms
//! of a Gröbner basis generate that ideal, which is what
//! [`cone_at_infinity`] relies on.

mod split;

pub use split::{
    is_admissible_split, random_linear_change, random_linear_change_with, CoordinateSplit,
    DEFAULT_CHANGE_ATTEMPTS,
};

use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Rational, Vars};

/// The ideal of the tangent cone at infinity.
#[derive(Clone, Debug)]
pub struct ConeResult {
    pub cone_ideal: Ideal,
    /// Every generator is homogeneous; always true by construction.
    pub is_homogeneous: bool,
}

impl ConeResult {
    pub fn generators(&self) -> &[Polynomial] {
        self.cone_ideal.generators()
    }
}

/// Highest forms of the reduced grevlex basis of `ideal`. The result is
/// itself a reduced grevlex basis of the cone ideal.
pub fn cone_at_infinity(ideal: &Ideal) -> Result<ConeResult> {
    ideal.ensure_proper()?;
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex)?;
    let forms = gb.iter().map(|g| g.highest_form()).collect::<Result<Vec<_>>>()?;
    let cone_ideal = if forms.is_empty() {
        Ideal::zero(ideal.vars())
    } else {
        Ideal::new(ideal.vars(), forms)?
    }
    .with_budget(ideal.budget());
    let is_homogeneous = cone_ideal.generators().iter().all(Polynomial::is_homogeneous);
    Ok(ConeResult { cone_ideal, is_homogeneous })
}

/// A name not yet used in `vars`, preferring `base`.
pub fn fresh_variable(vars: &Vars, base: &str) -> String {
    let mut name = base.to_string();
    while vars.contains(&name) {
        name.push('_');
    }
    name
}

/// Context of the projective closure: the affine variables followed by the
/// homogenizing one, so `(x_1, ..., x_n) ↦ (x_1 : ... : x_n : 1)`.
pub fn closure_vars(vars: &Vars) -> Vars {
    let mut names = vars.to_vec();
    names.push(fresh_variable(vars, "h"));
    names.into()
}

/// Homogenization of the reduced grevlex basis; generates the ideal of the
/// projective closure in `n + 1` variables.
pub fn projective_closure(ideal: &Ideal) -> Result<Ideal> {
    ideal.ensure_proper()?;
    let pvars = closure_vars(ideal.vars());
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex)?;
    let gens: Vec<Polynomial> = gb.iter().map(|g| g.homogenize_into(&pvars)).collect();
    let closure = if gens.is_empty() { Ideal::zero(&pvars) } else { Ideal::new(&pvars, gens)? };
    Ok(closure.with_budget(ideal.budget()))
}

/// `closure + (h)` restricted to the hyperplane `h = 0`, as a homogeneous
/// ideal in the original variables.
pub fn part_at_infinity(ideal: &Ideal) -> Result<Ideal> {
    let closure = projective_closure(ideal)?;
    let n = ideal.nvars();
    let mut gens = closure.generators().to_vec();
    gens.push(Polynomial::variable(closure.vars(), MonomialOrder::GrevLex, n));
    let with_h = Ideal::new(closure.vars(), gens)?.with_budget(ideal.budget());
    let zero = Rational::from_integer(0.into());
    let sliced: Vec<Polynomial> = with_h
        .groebner_basis(MonomialOrder::GrevLex)?
        .iter()
        .map(|g| g.specialize_into(n, &zero, ideal.vars()))
        .filter(|g| !g.is_zero())
        .collect();
    let part = if sliced.is_empty() { Ideal::zero(ideal.vars()) } else { Ideal::new(ideal.vars(), sliced)? };
    Ok(part.with_budget(ideal.budget()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::{parse_polynomial, vars};

    fn ideal(v: &[&str], g: &[&str]) -> Ideal {
        Ideal::parse(v, g).unwrap()
    }

    fn gens(v: &[&str], g: &[&str]) -> Vec<Polynomial> {
        g.iter().map(|s| parse_polynomial(s, v).unwrap()).collect()
    }

    const XY: [&str; 2] = ["x", "y"];
    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn cone_examples() {
        assert_eq!(cone_at_infinity(&ideal(&XY, &["y - x^2"])).unwrap().generators(), gens(&XY, &["x^2"]));
        assert_eq!(cone_at_infinity(&ideal(&XY, &["x*y - 1"])).unwrap().generators(), gens(&XY, &["x*y"]));
        let c = cone_at_infinity(&ideal(&XYZ, &["y - x^2", "z - x^3"])).unwrap();
        assert!(c.is_homogeneous);
        assert_eq!(c.generators(), gens(&XYZ, &["x^2", "x*y", "y^2 - x*z"]));
    }

    #[test]
    fn cone_of_unit_ideal_is_an_error() {
        assert_eq!(cone_at_infinity(&ideal(&XY, &["x", "x + 1"])).unwrap_err(), Error::UnitIdeal);
        assert_eq!(projective_closure(&ideal(&XY, &["1"])).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn raw_generator_forms_are_not_enough() {
        // top forms of the given generators cut out a bigger set than the cone
        let i = ideal(&XYZ, &["y - x^2", "z - x^3"]);
        let naive = ideal(&XYZ, &["x^2", "x^3"]);
        let cone = cone_at_infinity(&i).unwrap().cone_ideal;
        let witness = parse_polynomial("y^2 - x*z", &XYZ).unwrap();
        assert!(cone.contains(&witness).unwrap());
        assert!(!naive.contains(&witness).unwrap());
        for g in i.generators() {
            assert!(cone.contains(&g.highest_form().unwrap()).unwrap());
        }
    }

    #[test]
    fn closure_examples() {
        let hv = ["x", "y", "h"];
        assert_eq!(projective_closure(&ideal(&XY, &["y - x^2"])).unwrap().generators(), gens(&hv, &["x^2 - h*y"]));
        assert_eq!(projective_closure(&ideal(&XY, &["x*y - 1"])).unwrap().generators(), gens(&hv, &["x*y - h^2"]));
        assert_eq!(
            projective_closure(&ideal(&XY, &["x^2 + y^2"])).unwrap().generators(),
            gens(&hv, &["x^2 + y^2"])
        );
        // name clash picks a fresh variable
        let c = projective_closure(&ideal(&["h", "x"], &["h - x^2"])).unwrap();
        assert_eq!(c.vars()[2], "h_");
    }

    #[test]
    fn closure_dehomogenizes_back() {
        let i = ideal(&XYZ, &["y - x^2", "z - x^3"]);
        let c = projective_closure(&i).unwrap();
        let back: Vec<Polynomial> = c.generators().iter().map(|g| g.dehomogenize("h").unwrap()).collect();
        assert!(Ideal::new(&vars(&XYZ), back).unwrap().same_ideal(&i).unwrap());
    }

    #[test]
    fn part_at_infinity_examples() {
        assert_eq!(part_at_infinity(&ideal(&XY, &["y - x^2"])).unwrap().generators(), gens(&XY, &["x^2"]));
        assert_eq!(part_at_infinity(&ideal(&XY, &["x*y - 1"])).unwrap().generators(), gens(&XY, &["x*y"]));
        assert_eq!(part_at_infinity(&ideal(&XY, &["y"])).unwrap().generators(), gens(&XY, &["y"]));
    }

    #[test]
    fn part_at_infinity_matches_cone() {
        for (v, g) in [
            (&XYZ[..], &["y - x^2", "z - x^3"][..]),
            (&XY[..], &["y^2 - x^3 - x^2"][..]),
            (&XYZ[..], &["x^2 + y^2 - 1", "z - x"][..]),
        ] {
            let i = ideal(v, g);
            let a = cone_at_infinity(&i).unwrap().cone_ideal;
            let b = part_at_infinity(&i).unwrap();
            assert!(a.same_ideal(&b).unwrap());
        }
    }

    #[test]
    fn cone_of_homogeneous_ideal_is_its_basis() {
        let i = ideal(&XYZ, &["x^2 - y*z", "x*y + z^2"]);
        let c = cone_at_infinity(&i).unwrap();
        assert_eq!(c.generators(), &i.groebner_basis(MonomialOrder::GrevLex).unwrap()[..]);
    }
}
