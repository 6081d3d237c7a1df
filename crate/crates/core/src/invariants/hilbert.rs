//! Hilbert series numerators of monomial ideals.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Integer polynomial in `t`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// `1 - t^d`.
    pub fn one_minus_power(d: u32) -> Self {
        let mut c = vec![0; d as usize + 1];
        c[0] += 1;
        c[d as usize] -= 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }

    fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0)).collect())
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut c = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    fn shift(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0];
        c.extend_from_slice(&self.0);
        IntPoly(c)
    }

    /// Exact division by `1 - t`; `None` when `t = 1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() || self.eval_one() != 0 {
            return None;
        }
        // q_i = sum_{j <= i} c_j
        let mut q = Vec::with_capacity(self.0.len() - 1);
        let mut acc = 0;
        for &c in &self.0[..self.0.len() - 1] {
            acc += c;
            q.push(acc);
        }
        Some(IntPoly::new(q))
    }

    /// Splits off the largest power of `1 - t`: returns `(c, Q)` with
    /// `self = (1 - t)^c Q` and `Q(1) != 0`.
    pub fn strip_one_minus_t(&self) -> (u32, IntPoly) {
        let mut q = self.clone();
        let mut c = 0;
        while let Some(next) = q.div_one_minus_t() {
            q = next;
            c += 1;
        }
        (c, q)
    }

    /// First `len` coefficients of the power series `self / (1 - t)^n`.
    pub fn series(&self, n: u32, len: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..len).map(|i| *self.0.get(i).unwrap_or(&0)).collect();
        for _ in 0..n {
            for i in 1..len {
                s[i] += s[i - 1];
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let sep = if first { "" } else { " " };
            let mag = c.abs();
            let body = match (d, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{mag}*t"),
                (_, 1) => format!("t^{d}"),
                _ => format!("{mag}*t^{d}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sep}{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A monomial ideal by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.exponents().to_vec()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        assert!(gens.iter().all(|m| m.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// Ideal of single-term polynomials; coefficients are ignored.
    pub fn from_polynomials(nvars: usize, polys: &[Polynomial]) -> Result<Self> {
        let gens = polys
            .iter()
            .map(|p| match p.terms() {
                [t] => Ok(t.monomial.clone()),
                _ => Err(Error::Domain(format!("`{p}` is not a monomial"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(nvars, gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of
/// `Q[x_1..x_n] / M`.
///
/// Uses the pivot recursion `N(M) = N(M + (v)) + t N(M : v)` on a variable
/// `v`, memoized on the minimal generating set.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    let mut memo = HashMap::new();
    numerator(ideal.nvars, ideal.gens.clone(), &mut memo)
}

fn numerator(nvars: usize, gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, IntPoly>) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::default();
    }
    // minimal pure powers live in distinct variables
    if gens.iter().all(|m| m.pure_power_of().is_some()) {
        return gens.iter().fold(IntPoly::one(), |acc, m| acc.mul(&IntPoly::one_minus_power(m.degree())));
    }
    if let Some(n) = memo.get(&gens) {
        return n.clone();
    }
    // pivot on the variable shared by the most mixed generators
    let mut counts = vec![0usize; nvars];
    for m in gens.iter().filter(|m| m.pure_power_of().is_none()) {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let v = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let var = Monomial::variable(nvars, v);

    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exponents()[v] == 0).cloned().collect();
    plus.push(var.clone());
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| m.div(&var).unwrap_or_else(|| m.clone()))
        .collect();

    let a = numerator(nvars, minimalize(plus), memo);
    let b = numerator(nvars, minimalize(quotient), memo);
    let n = a.add(&b.shift());
    memo.insert(gens, n.clone());
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(hilbert_numerator(&mi(2, &[])), IntPoly::new(vec![1]));
        assert_eq!(hilbert_numerator(&mi(3, &[&[2, 0, 0]])), IntPoly::new(vec![1, 0, -1]));
        let n = hilbert_numerator(&mi(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]));
        assert_eq!(n, IntPoly::new(vec![1, 0, -3, 2]));
        // 1, 3, 3, 3, ... standard monomials z^d, x z^{d-1}, y z^{d-1}
        assert_eq!(n.series(3, 6), vec![1, 3, 3, 3, 3, 3]);
        assert_eq!(n.to_string(), "1 - 3*t^2 + 2*t^3");
    }

    #[test]
    fn strip_factors() {
        let n = IntPoly::new(vec![1, 0, -3, 2]);
        let (c, q) = n.strip_one_minus_t();
        assert_eq!(c, 2);
        assert_eq!(q, IntPoly::new(vec![1, 2]));
        assert_eq!(IntPoly::new(vec![1, 0, -1]).strip_one_minus_t(), (1, IntPoly::new(vec![1, 1])));
    }

    #[test]
    fn unit_monomial_ideal() {
        assert!(hilbert_numerator(&mi(2, &[&[0, 0]])).is_zero());
    }

    #[test]
    fn rejects_non_monomials() {
        let p = crate::poly::parse_polynomial("x + y", &["x", "y"]).unwrap();
        assert!(MonomialIdeal::from_polynomials(2, &[p]).is_err());
    }
}
