//! Exact multivariate polynomials: monomials, orders, arithmetic, parsing.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod univariate;

pub use monomial::Monomial;
pub use order::{monomial_compare, MonomialOrder};
pub use parse::{format_polynomial, parse_in, parse_polynomial};
pub use polynomial::{vars, FloatPolynomial, Polynomial, Rational, Term, Vars};
pub(crate) use polynomial::same_vars;
pub use univariate::UniPoly;
