//! Normal forms, S-polynomials and Buchberger's algorithm.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{same_vars, Monomial, MonomialOrder, Polynomial};

/// Default cap on the number of S-pair reductions in one basis computation.
pub const DEFAULT_BUDGET: usize = 200_000;

fn check_contexts(f: &Polynomial, others: &[Polynomial]) -> Result<()> {
    for g in others {
        if !same_vars(f.vars(), g.vars()) {
            return Err(Error::Context(format!(
                "[{}] vs [{}]",
                f.vars().join(", "),
                g.vars().join(", ")
            )));
        }
    }
    Ok(())
}

/// Full normal form of `f` modulo `basis` under `order`: `f - r` lies in the
/// ideal of `basis` and no term of `r` is divisible by a leading monomial of
/// `basis`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    check_contexts(f, basis)?;
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    Ok(normal_form(&f.with_order(order), &basis))
}

/// Normal form; inputs must already share context and order, and the basis
/// must be free of zeros.
pub(crate) fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut rest = f.clone();
    let mut remainder = Polynomial::zero(f.vars(), f.order());
    'outer: while let Some(lead) = rest.leading_term() {
        for g in basis {
            let glead = g.leading_term().expect("nonzero basis element");
            if let Some(q) = lead.monomial.div(&glead.monomial) {
                let c = -(&lead.coeff / &glead.coeff);
                rest = rest.add_scaled(&c, &q, g);
                continue 'outer;
            }
        }
        let t = rest.pop_leading().expect("nonempty");
        remainder.push_trailing(t);
    }
    remainder
}

/// The S-polynomial `(L/lt(f)) f - (L/lt(g)) g` with `L` the lcm of the
/// leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    check_contexts(f, std::slice::from_ref(g))?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("S-polynomial of the zero polynomial".into()));
    }
    Ok(spoly(&f.with_order(order), &g.with_order(order)))
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let lcm = ft.monomial.lcm(&gt.monomial);
    let left = f.mul_term(&ft.coeff.recip(), &lcm.div(&ft.monomial).unwrap());
    left.add_scaled(&-gt.coeff.recip(), &lcm.div(&gt.monomial).unwrap(), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `generators` under
/// `order`: monic, sorted by descending leading monomial.
///
/// Pairs are selected by the normal strategy (smallest lcm first) and
/// pruned with Buchberger's coprime and chain criteria. At most `budget`
/// pairs are reduced before the computation gives up with
/// [`Error::Budget`].
pub fn buchberger(
    generators: &[Polynomial],
    order: MonomialOrder,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let Some(first) = generators.first() else {
        return Err(Error::Domain("empty generator list".into()));
    };
    check_contexts(first, generators)?;
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            let g = g.with_order(order).monic();
            if g.is_constant() {
                return Ok(vec![g]);
            }
            basis.push(g);
        }
    }
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&basis, &mut pending, &mut pending_set, i, j);
        }
    }
    let mut steps = 0usize;
    while let Some(pair) = pop_pair(&mut pending, order) {
        pending_set.remove(&(pair.i, pair.j));
        if chain_criterion(&basis, &pending_set, &pair) {
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(Error::Budget { budget });
        }
        let s = spoly(&basis[pair.i], &basis[pair.j]);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return Ok(vec![r]);
        }
        basis.push(r);
        let k = basis.len() - 1;
        for i in 0..k {
            push_pair(&basis, &mut pending, &mut pending_set, i, k);
        }
    }
    Ok(interreduce(basis, order))
}

fn push_pair(
    basis: &[Polynomial],
    pending: &mut Vec<Pair>,
    pending_set: &mut HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) {
    let (a, b) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
    // coprime leading monomials: the S-polynomial reduces to zero
    if a.is_coprime(b) {
        return;
    }
    pending.push(Pair { i, j, lcm: a.lcm(b) });
    pending_set.insert((i, j));
}

fn pop_pair(pending: &mut Vec<Pair>, order: MonomialOrder) -> Option<Pair> {
    let best = pending
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| {
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| order.compare(&p.lcm, &q.lcm))
        })
        .map(|(idx, _)| idx)?;
    Some(pending.swap_remove(best))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Buchberger's second criterion: some third leading monomial divides the
/// lcm and both of its pairs with the current ones were already treated.
fn chain_criterion(basis: &[Polynomial], pending: &HashSet<(usize, usize)>, pair: &Pair) -> bool {
    (0..basis.len()).any(|l| {
        l != pair.i
            && l != pair.j
            && basis[l].leading_monomial().unwrap().divides(&pair.lcm)
            && !pending.contains(&key(pair.i, l))
            && !pending.contains(&key(pair.j, l))
    })
}

/// Turns any Gröbner basis into the reduced one.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    basis.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // minimalize: drop elements whose leading monomial is a multiple of another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&minimal[i], &others).monic());
    }
    reduced.sort_by(|a, b| order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
    let basis: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if !normal_form(&spoly(&basis[i], &basis[j]), &basis).is_zero() {
                return false;
            }
        }
    }
    true
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &XYZ).unwrap()
    }

    fn ps(v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| p(s)).collect()
    }

    const G: MonomialOrder = MonomialOrder::GrevLex;

    #[test]
    fn reduce_examples() {
        assert!(reduce(&p("x^2"), &ps(&["x"]), G).unwrap().is_zero());
        assert_eq!(reduce(&p("x^2*y"), &ps(&["y - x^2"]), G).unwrap(), p("y^2"));
        assert_eq!(reduce(&p("x + 1"), &ps(&["y"]), G).unwrap(), p("x + 1"));
    }

    #[test]
    fn reduce_rejects_mixed_contexts() {
        let other = parse_polynomial("x", &["x", "w"]).unwrap();
        assert!(matches!(reduce(&p("x"), &[other], G), Err(Error::Context(_))));
    }

    #[test]
    fn s_polynomial_examples() {
        assert!(s_polynomial(&p("x"), &p("y"), G).unwrap().is_zero());
        assert_eq!(s_polynomial(&p("x^2 - y"), &p("x*y - z"), G).unwrap(), p("-y^2 + x*z"));
        let f = p("x^3 - y*z + 1");
        assert!(s_polynomial(&f, &f, G).unwrap().is_zero());
        assert!(s_polynomial(&f, &p("0"), G).is_err());
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(buchberger(&ps(&["y - x^2"]), G, DEFAULT_BUDGET).unwrap(), ps(&["x^2 - y"]));
        assert_eq!(buchberger(&ps(&["y", "x"]), G, DEFAULT_BUDGET).unwrap(), ps(&["x", "y"]));
        assert_eq!(
            buchberger(&ps(&["y - x^2", "z - x^3"]), G, DEFAULT_BUDGET).unwrap(),
            ps(&["x^2 - y", "x*y - z", "y^2 - x*z"])
        );
        assert_eq!(buchberger(&ps(&["x + 1", "x"]), G, DEFAULT_BUDGET).unwrap(), ps(&["1"]));
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        let gb = buchberger(&ps(&["y - x^2", "z - x^3"]), MonomialOrder::Lex, DEFAULT_BUDGET).unwrap();
        assert!(is_groebner_basis(&gb, MonomialOrder::Lex));
        assert_eq!(gb, ps(&["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]));
    }

    #[test]
    fn budget_is_enforced() {
        let gens = ps(&["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        assert_eq!(buchberger(&gens, G, 1), Err(Error::Budget { budget: 1 }));
        let gb = buchberger(&gens, G, DEFAULT_BUDGET).unwrap();
        assert!(is_groebner_basis(&gb, G));
    }
}
