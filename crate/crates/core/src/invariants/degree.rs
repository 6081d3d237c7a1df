use super::hilbert::{hilbert_numerator, IntPoly, MonomialIdeal};
use crate::cone::projective_closure;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::MonomialOrder;

/// Hilbert series data of the projective closure of an affine variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `N(t)` with series `N(t) / (1 - t)^(n+1)` over the closure's ring.
    pub numerator: IntPoly,
    /// Dimension; `-1` for the empty variety.
    pub dim: i64,
    /// Degree counted with multiplicity; `0` for the empty variety.
    pub degree: u64,
}

impl HilbertData {
    pub fn empty() -> Self {
        HilbertData { numerator: IntPoly::default(), dim: -1, degree: 0 }
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

/// Dimension and degree of `V(ideal)` via the Hilbert series of the
/// initial ideal of its projective closure.
pub fn dim_degree(ideal: &Ideal) -> Result<HilbertData> {
    if ideal.is_unit()? {
        return Ok(HilbertData::empty());
    }
    let closure = projective_closure(ideal)?;
    let nproj = closure.nvars();
    let leads = closure.leading_monomials(MonomialOrder::GrevLex)?;
    let numerator = hilbert_numerator(&MonomialIdeal::new(nproj, leads));
    let (c, q) = numerator.strip_one_minus_t();
    let dim = ideal.nvars() as i64 - c as i64;
    let degree = u64::try_from(q.eval_one()).expect("Hilbert degree is positive");
    Ok(HilbertData { numerator, dim, degree })
}
