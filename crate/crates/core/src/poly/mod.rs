//! Exact multivariate polynomials over `Q`, monomial orders and text I/O.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_in_ring, parse_poly};
pub use polynomial::Polynomial;

use std::sync::Arc;

/// Exact rational coefficient, always in lowest terms.
pub type Coefficient = num_rational::BigRational;

/// Build a shared variable list.
pub fn ring(vars: &[&str]) -> Arc<[String]> {
    vars.iter().map(|s| s.to_string()).collect()
}

pub fn rational(n: i64, d: i64) -> Coefficient {
    Coefficient::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Coefficient {
    Coefficient::from_integer(n.into())
}
