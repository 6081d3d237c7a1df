//! Polynomial ideals and their Gröbner bases.

mod groebner;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use groebner::{buchberger, is_groebner_basis, reduce, s_polynomial, DEFAULT_BUDGET};

use crate::error::{Error, Result};
use crate::poly::{parse_in, same_vars, vars, Monomial, MonomialOrder, Polynomial, Vars};

type BasisCache = Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// An ideal given by generators, with reduced Gröbner bases cached per order.
///
/// Clones share the cache; the generators never change after construction.
#[derive(Clone)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<Polynomial>,
    budget: usize,
    cache: BasisCache,
}

impl Ideal {
    /// Builds the ideal of `generators`; zero generators are dropped, so an
    /// all-zero list gives the zero ideal. The list itself must be nonempty.
    pub fn new(vars: &Vars, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Domain("an ideal needs at least one generator".into()));
        }
        for g in &generators {
            if !same_vars(g.vars(), vars) {
                return Err(Error::Context(format!(
                    "generator `{g}` is not in [{}]",
                    vars.join(", ")
                )));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { vars: vars.clone(), generators, budget: DEFAULT_BUDGET, cache: Default::default() })
    }

    pub fn zero(vars: &Vars) -> Self {
        Ideal { vars: vars.clone(), generators: Vec::new(), budget: DEFAULT_BUDGET, cache: Default::default() }
    }

    /// Parses generators written in the polynomial grammar.
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(names: &[S], generators: &[T]) -> Result<Self> {
        let vs = vars(names);
        let gens = generators
            .iter()
            .map(|g| parse_in(g.as_ref(), &vs, MonomialOrder::GrevLex))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&vs, gens)
    }

    /// Sets the S-pair budget for basis computations on this ideal.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self.cache = Default::default();
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = if self.is_zero() {
            Vec::new()
        } else {
            buchberger(&self.generators, order, self.budget)?
        };
        // another thread may have won the race; keep whichever landed first
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order).or_insert_with(|| Arc::new(gb)).clone())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(gb.len() == 1 && gb[0].is_constant())
    }

    /// Fails with [`Error::UnitIdeal`] for the unit ideal.
    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_unit()? {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Ideal membership: `f` reduces to zero modulo the grevlex basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_vars(f.vars(), &self.vars) {
            return Err(Error::Context(format!("`{f}` is not in [{}]", self.vars.join(", "))));
        }
        let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(reduce(f, &gb, MonomialOrder::GrevLex)?.is_zero())
    }

    /// Equality of ideals via their reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_vars(&self.vars, &other.vars) {
            return Err(Error::Context("ideals live in different rings".into()));
        }
        Ok(self.groebner_basis(MonomialOrder::GrevLex)? == other.groebner_basis(MonomialOrder::GrevLex)?)
    }

    pub fn leading_monomials(&self, order: MonomialOrder) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis(order)?
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect())
    }

    /// Finitely many solutions: a pure power of every variable leads some
    /// basis element. The unit ideal counts as zero-dimensional.
    pub fn is_zero_dimensional(&self) -> Result<bool> {
        let leads = self.leading_monomials(MonomialOrder::GrevLex)?;
        Ok(count_standard_monomials(&leads, self.nvars()).is_some())
    }

    /// Vector-space dimension of the quotient ring, i.e. the number of
    /// solutions counted with multiplicity.
    pub fn quotient_dimension(&self) -> Result<usize> {
        let leads = self.leading_monomials(MonomialOrder::GrevLex)?;
        count_standard_monomials(&leads, self.nvars()).ok_or(Error::NotZeroDimensional)
    }

    /// `I ∩ Q[x_{k+1}, ..., x_n]`, as an ideal in the last `n - k` variables.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        let n = self.nvars();
        if k == 0 || k >= n {
            return Err(Error::Domain(format!("cannot eliminate {k} of {n} variables")));
        }
        let tail: Vars = self.vars[k..].to_vec().into();
        let gb = self.groebner_basis(MonomialOrder::Block(k))?;
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.leading_monomial().unwrap().exponents()[..k].iter().all(|&e| e == 0))
            .map(|g| g.restrict_to_trailing(&tail).with_order(MonomialOrder::GrevLex))
            .collect();
        if kept.is_empty() {
            Ok(Ideal::zero(&tail).with_budget(self.budget))
        } else {
            Ok(Ideal::new(&tail, kept)?.with_budget(self.budget))
        }
    }
}

/// `f ∈ I`.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Number of monomials divisible by none of `leads`, or `None` when that
/// set is infinite. Zero when some lead is `1`.
pub fn count_standard_monomials(leads: &[Monomial], nvars: usize) -> Option<usize> {
    if leads.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in leads {
        if let Some(i) = m.pure_power_of() {
            bounds[i] = bounds[i].min(m.exponents()[i]);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    if nvars == 0 {
        return Some(1);
    }
    let mut count = 0;
    let mut e = vec![0u32; nvars];
    loop {
        if !leads.iter().any(|m| m.exponents().iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
            if i == nvars {
                return Some(count);
            }
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}]({})", self.vars.join(", "), self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}
