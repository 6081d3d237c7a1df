//! Dense univariate polynomials over the rationals, used for squarefree parts
//! of eliminants.

use num::Zero;

use super::{Monomial, MonomialOrder, Polynomial, Rational, Vars};
use crate::error::{Error, Result};

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    /// Reads a polynomial involving only the variable at `index`.
    pub fn from_polynomial(f: &Polynomial, index: usize) -> Result<Self> {
        let mut coeffs = vec![Rational::zero(); (f.degree_in(index).max(0) + 1) as usize];
        for t in f.terms() {
            let e = t.monomial.exponents();
            if e.iter().enumerate().any(|(i, &x)| i != index && x > 0) {
                return Err(Error::Domain(format!("`{f}` is not univariate")));
            }
            coeffs[e[index] as usize] += &t.coeff;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds as a polynomial in the variable at `index` of `vars`.
    pub fn to_polynomial(&self, vars: &Vars, order: MonomialOrder, index: usize) -> Polynomial {
        let n = vars.len();
        let terms = self.0.iter().enumerate().map(|(d, c)| {
            let mut e = vec![0; n];
            e[index] = d as u32;
            (c.clone(), Monomial::new(e))
        });
        Polynomial::from_terms(vars, order, terms.collect::<Vec<_>>())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * Rational::from_integer((d as i64).into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        match self.0.last() {
            Some(lc) => UniPoly(self.0.iter().map(|c| c / lc).collect()),
            None => self.clone(),
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.0.len() - 1;
        let lc = divisor.0.last().unwrap();
        if rem.len() <= dd {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`: same roots, each simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() < 1 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}
