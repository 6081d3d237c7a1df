//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order. Variables are ranked by their position in the context:
/// the first variable is the largest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Graded lexicographic.
    GrLex,
    /// Pure lexicographic; ignores total degree.
    Lex,
    /// Elimination order for the first `k` variables: grevlex on that block,
    /// ties broken by grevlex on the remaining variables.
    Block(usize),
}

impl MonomialOrder {
    pub fn is_graded(self) -> bool {
        matches!(self, MonomialOrder::GrevLex | MonomialOrder::GrLex)
    }

    /// Compares two monomials of equal length. Panics on length mismatch; use
    /// [`monomial_compare`] for the checked variant.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        assert_eq!(a.len(), b.len(), "monomials from different contexts");
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::GrLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b)),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// Checked comparison of two monomials under `order`.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Context(format!(
            "monomials have {} and {} exponents",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(order.compare(a, b))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::GrLex => f.write_str("grlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::Domain(format!("unknown monomial order `{other}`"))),
        }
    }
}
