use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::complex::Complex64;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Ordered variable names; the first name is the largest variable.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under `order` with no zero
/// coefficients, so the first term is always the leading term.
#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Vars,
    order: MonomialOrder,
    terms: Vec<Term>,
}

pub(crate) fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a[..] == b[..]
}

impl Polynomial {
    pub fn zero(vars: &Vars, order: MonomialOrder) -> Self {
        Polynomial { vars: vars.clone(), order, terms: Vec::new() }
    }

    pub fn constant(vars: &Vars, order: MonomialOrder, c: Rational) -> Self {
        Self::from_terms(vars, order, [(c, Monomial::one(vars.len()))])
    }

    pub fn one(vars: &Vars, order: MonomialOrder) -> Self {
        Self::constant(vars, order, Rational::one())
    }

    pub fn variable(vars: &Vars, order: MonomialOrder, index: usize) -> Self {
        Self::from_terms(vars, order, [(Rational::one(), Monomial::variable(vars.len(), index))])
    }

    /// Builds a polynomial from arbitrary terms; like monomials are combined.
    pub fn from_terms<I>(vars: &Vars, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial length differs from context");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial { vars: vars.clone(), order, terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|t| t.monomial.degree() as i64).max().unwrap_or(-1)
    }

    /// Degree in the variable at `index`; `-1` for the zero polynomial.
    pub fn degree_in(&self, index: usize) -> i64 {
        self.terms
            .iter()
            .map(|t| t.monomial.exponents()[index] as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.monomial.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Same polynomial, terms re-sorted under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial { vars: self.vars.clone(), order, terms }
    }

    /// Same terms in a renamed context of equal size.
    pub fn with_vars(&self, vars: &Vars) -> Polynomial {
        assert_eq!(vars.len(), self.nvars());
        Polynomial { vars: vars.clone(), order: self.order, terms: self.terms.clone() }
    }

    fn check_context(&self, other: &Polynomial) -> Result<()> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "[{}] vs [{}]",
                self.vars.join(", "),
                other.vars.join(", ")
            )))
        }
    }

    /// `self + c * m * other`, by a single merge of two sorted term lists.
    pub(crate) fn add_scaled(&self, c: &Rational, m: &Monomial, other: &Polynomial) -> Polynomial {
        let ord = self.order;
        let scaled = other.terms.iter().map(|t| Term {
            coeff: &t.coeff * c,
            monomial: t.monomial.mul(m),
        });
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().cloned().peekable();
        let mut rhs = if ord == other.order {
            scaled.collect::<Vec<_>>()
        } else {
            let mut v: Vec<_> = scaled.collect();
            v.sort_by(|a, b| ord.compare(&b.monomial, &a.monomial));
            v
        }
        .into_iter()
        .peekable();
        loop {
            let step = match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => ord.compare(&a.monomial, &b.monomial),
            };
            match step {
                Ordering::Greater => out.push(lhs.next().unwrap()),
                Ordering::Less => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let a = lhs.next().unwrap();
                    let b = rhs.next().unwrap();
                    let coeff = a.coeff + b.coeff;
                    if !coeff.is_zero() {
                        out.push(Term { coeff, monomial: a.monomial });
                    }
                }
            }
        }
        Polynomial { vars: self.vars.clone(), order: ord, terms: out }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term that is smaller than every present term.
    pub(crate) fn push_trailing(&mut self, t: Term) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|l| self.order.compare(&l.monomial, &t.monomial).is_gt()));
        self.terms.push(t);
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        Ok(self.add_scaled(&Rational::one(), &Monomial::one(self.nvars()), other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        Ok(self.add_scaled(&-Rational::one(), &Monomial::one(self.nvars()), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        let terms = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (&a.coeff * &b.coeff, a.monomial.mul(&b.monomial)))
        });
        Ok(Polynomial::from_terms(&self.vars, self.order, terms))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.clone() })
            .collect();
        Polynomial { vars: self.vars.clone(), order: self.order, terms }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        Polynomial::zero(&self.vars, self.order).add_scaled(c, m, self)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.vars, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scaled so that the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Sum of the terms of maximal total degree.
    pub fn highest_form(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::Domain("highest form of the zero polynomial".into()));
        }
        let d = self.degree() as u32;
        let terms = self.terms.iter().filter(|t| t.monomial.degree() == d).cloned().collect();
        Ok(Polynomial { vars: self.vars.clone(), order: self.order, terms })
    }

    /// Homogenizes with a new last variable `hv`, padding every term up to
    /// the total degree.
    pub fn homogenize(&self, hv: &str) -> Result<Polynomial> {
        if self.vars.iter().any(|v| v == hv) {
            return Err(Error::Context(format!("variable `{hv}` already in context")));
        }
        let mut names: Vec<String> = self.vars.to_vec();
        names.push(hv.to_string());
        let vars: Vars = names.into();
        Ok(self.homogenize_into(&vars))
    }

    /// Homogenization into a prepared context whose last variable is the
    /// homogenizing one.
    pub(crate) fn homogenize_into(&self, vars: &Vars) -> Polynomial {
        debug_assert_eq!(vars.len(), self.nvars() + 1);
        let d = self.degree().max(0) as u32;
        let terms = self.terms.iter().map(|t| {
            let mut e = t.monomial.exponents().to_vec();
            e.push(d - t.monomial.degree());
            (t.coeff.clone(), Monomial::new(e))
        });
        Polynomial::from_terms(vars, self.order, terms)
    }

    /// Sets `hv = 1` and drops it from the context.
    pub fn dehomogenize(&self, hv: &str) -> Result<Polynomial> {
        let index = self.var_index(hv)?;
        Ok(self.specialize(index, &Rational::one()))
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Context(format!("variable `{name}` not in context")))
    }

    /// Substitutes `value` for the variable at `index` and removes that
    /// variable from the context.
    pub fn specialize(&self, index: usize, value: &Rational) -> Polynomial {
        let names: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, v)| v.clone())
            .collect();
        let vars: Vars = names.into();
        self.specialize_into(index, value, &vars)
    }

    pub(crate) fn specialize_into(&self, index: usize, value: &Rational, vars: &Vars) -> Polynomial {
        let mut powers: Vec<Rational> = vec![Rational::one()];
        let terms = self.terms.iter().map(|t| {
            let mut e = t.monomial.exponents().to_vec();
            let p = e.remove(index) as usize;
            while powers.len() <= p {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            (&t.coeff * &powers[p], Monomial::new(e))
        });
        let terms: Vec<_> = terms.collect();
        Polynomial::from_terms(vars, self.order, terms)
    }

    /// Drops variables that do not occur: keeps only the trailing `vars.len()`
    /// variables. Panics if a dropped variable occurs.
    pub(crate) fn restrict_to_trailing(&self, vars: &Vars) -> Polynomial {
        let skip = self.nvars() - vars.len();
        let terms = self.terms.iter().map(|t| {
            let e = t.monomial.exponents();
            assert!(e[..skip].iter().all(|&x| x == 0), "dropped variable occurs");
            (t.coeff.clone(), Monomial::new(e[skip..].to_vec()))
        });
        Polynomial::from_terms(vars, self.order, terms.collect::<Vec<_>>())
    }

    /// `f(images[0], ..., images[n-1])`; all images share one context.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::Context(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        let target = images
            .first()
            .map(|p| (p.vars.clone(), p.order))
            .ok_or_else(|| Error::Context("composition into an empty context".into()))?;
        for p in images {
            if !same_vars(&p.vars, &target.0) {
                return Err(Error::Context("composition images differ in context".into()));
            }
        }
        let mut cache: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target.0, target.1), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target.0, target.1);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target.0, target.1, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                prod = &prod * &cache[i][e as usize];
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc += v;
        }
        acc
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        self.to_float().eval(point)
    }

    pub fn to_float(&self) -> FloatPolynomial {
        FloatPolynomial {
            terms: self
                .terms
                .iter()
                .map(|t| (t.coeff.to_f64().unwrap_or(f64::NAN), t.monomial.exponents().to_vec()))
                .collect(),
            nvars: self.nvars(),
        }
    }

    /// Partial derivative with respect to the variable at `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.monomial.exponents()[index];
            (e > 0).then(|| {
                let mut m = t.monomial.clone();
                m.exponents_mut()[index] -= 1;
                (&t.coeff * Rational::from_integer(e.into()), m)
            })
        });
        Polynomial::from_terms(&self.vars, self.order, terms.collect::<Vec<_>>())
    }
}

/// `f64` image of a polynomial for numerical evaluation.
#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    pub terms: Vec<(f64, Vec<u32>)>,
    pub nvars: usize,
}

impl FloatPolynomial {
    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, e)| term_value(*c, e, point))
            .sum()
    }

    /// Sum of absolute term values; the natural scale for relative residuals.
    pub fn magnitude(&self, point: &[Complex64]) -> f64 {
        self.terms.iter().map(|(c, e)| term_value(*c, e, point).norm()).sum()
    }
}

fn term_value(c: f64, e: &[u32], point: &[Complex64]) -> Complex64 {
    let mut v = Complex64::new(c, 0.0);
    for (x, &k) in point.iter().zip(e) {
        if k > 0 {
            v *= x.powu(k);
        }
    }
    v
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !same_vars(&self.vars, &other.vars) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different contexts.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial context mismatch")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the input grammar, e.g. `-x^2 + 3/2*x*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            let mut factors = 0;
            if !abs.is_one() || t.monomial.is_one() {
                write_rational(f, &abs)?;
                factors += 1;
            }
            for (name, &e) in self.vars.iter().zip(t.monomial.exponents()) {
                if e == 0 {
                    continue;
                }
                if factors > 0 {
                    f.write_str("*")?;
                }
                f.write_str(name)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                factors += 1;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x + y") + &p("-y"), p("x"));
        assert_eq!(&p("x + 1") * &p("x - 1"), p("x^2 - 1"));
        assert!((&p("y - x^2") * &p("0")).is_zero());
        assert_eq!(p("0").degree(), -1);
        assert_eq!(p("x^2*y + z").degree(), 3);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = parse_polynomial("x", &["x", "y"]).unwrap();
        let b = parse_polynomial("x", &["x", "z"]).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::Context(_))));
    }

    #[test]
    fn highest_form_examples() {
        assert_eq!(p("y - x^2").highest_form().unwrap(), p("-x^2"));
        assert_eq!(p("x*y - 1").highest_form().unwrap(), p("x*y"));
        let h = p("x^2 + x*y + z^2");
        assert_eq!(h.highest_form().unwrap(), h);
        assert!(p("0").highest_form().is_err());
    }

    #[test]
    fn homogenize_examples() {
        let hy = parse_polynomial("h*y - x^2", &["x", "y", "h"]).unwrap();
        let f = parse_polynomial("y - x^2", &["x", "y"]).unwrap();
        assert_eq!(f.homogenize("h").unwrap(), hy);
        assert_eq!(hy.dehomogenize("h").unwrap(), f);
        let g = parse_polynomial("x*y - 1", &["x", "y"]).unwrap();
        assert_eq!(
            g.homogenize("h").unwrap(),
            parse_polynomial("x*y - h^2", &["x", "y", "h"]).unwrap()
        );
        assert!(f.homogenize("x").is_err());
    }

    #[test]
    fn display_renders_the_grammar() {
        assert_eq!(p("y - x^2").to_string(), "-x^2 + y");
        assert_eq!(p("3/2*x*y + 1").to_string(), "3/2*x*y + 1");
        assert_eq!(p("x*y - 2/3*z^3 - 7").to_string(), "-2/3*z^3 + x*y - 7");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn compose_and_derivative() {
        let f = p("x^2 + y");
        let vs = vars(&["u", "v"]);
        let u = Polynomial::variable(&vs, MonomialOrder::GrevLex, 0);
        let v = Polynomial::variable(&vs, MonomialOrder::GrevLex, 1);
        let img = [&u + &v, &u - &v, u.clone()];
        let g = f.compose(&img).unwrap();
        let expect = parse_polynomial("u^2 + 2*u*v + v^2 + u - v", &["u", "v"]).unwrap();
        assert_eq!(g, expect);
        assert_eq!(p("x^3*y + y").derivative(0), p("3*x^2*y"));
    }

    #[test]
    fn specialize_drops_variable() {
        let f = p("x^2*y - z + 3");
        let g = f.specialize(1, &Rational::from_integer(2.into()));
        assert_eq!(g, parse_polynomial("2*x^2 - z + 3", &["x", "z"]).unwrap());
    }
}
