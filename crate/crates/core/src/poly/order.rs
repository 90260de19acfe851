use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial ordering on `Q[z_1, …, z_n]`, extended to free modules by
/// position over term.
///
/// Every order compares a signed weighted degree first and breaks ties
/// reverse-lexicographically. Positive weights give a global (well-)order
/// with `1 < x`; negative weights give a local order with `1 > x`, which
/// models the local ring at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    DegRevLex,
    NegDegRevLex,
    /// All weights nonzero and of one sign.
    Weighted(Vec<i64>),
}

impl MonomialOrder {
    pub fn is_local(&self) -> bool {
        match self {
            MonomialOrder::DegRevLex => false,
            MonomialOrder::NegDegRevLex => true,
            MonomialOrder::Weighted(w) => w.first().is_some_and(|&x| x < 0),
        }
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Weighted(w) = self {
            if w.len() != nvars {
                return Err(Error::InvalidOrder(format!(
                    "{} weights for {} variables",
                    w.len(),
                    nvars
                )));
            }
            let positive = w.iter().all(|&x| x > 0);
            let negative = w.iter().all(|&x| x < 0);
            if !(positive || negative) {
                return Err(Error::InvalidOrder(
                    "weights must be nonzero and share one sign".into(),
                ));
            }
        }
        Ok(())
    }

    /// Compare two monomials of the same ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::RingMismatch(format!(
                "monomials with {} and {} exponents",
                a.nvars(),
                b.nvars()
            )));
        }
        self.validate(a.nvars())?;
        Ok(self.cmp_monomials(a, b))
    }

    pub(crate) fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = match self {
            MonomialOrder::DegRevLex => (a.degree() as i64, b.degree() as i64),
            MonomialOrder::NegDegRevLex => (-(a.degree() as i64), -(b.degree() as i64)),
            MonomialOrder::Weighted(w) => (a.weighted_degree(w), b.weighted_degree(w)),
        };
        da.cmp(&db).then_with(|| revlex(a, b))
    }

    /// Module order: position over term, lower component index ranks higher.
    pub(crate) fn cmp_terms(&self, ca: usize, a: &Monomial, cb: usize, b: &Monomial) -> Ordering {
        cb.cmp(&ca).then_with(|| self.cmp_monomials(a, b))
    }

    /// Non-negative degree used for ecart: the total degree, or `Σ |w_i| α_i`.
    pub(crate) fn ecart_degree(&self, m: &Monomial) -> i64 {
        match self {
            MonomialOrder::DegRevLex | MonomialOrder::NegDegRevLex => m.degree() as i64,
            MonomialOrder::Weighted(w) => m
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &x)| e as i64 * x.abs())
                .sum(),
        }
    }
}

/// At equal degree the monomial with the smaller exponent in the last
/// differing variable is larger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn local_one_is_largest() {
        let ord = MonomialOrder::NegDegRevLex;
        assert_eq!(ord.compare(&m(&[0]), &m(&[1])).unwrap(), Ordering::Greater);
        assert_eq!(
            ord.compare(&m(&[0, 0, 0]), &m(&[0, 0, 5])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn degrevlex_tie_break() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(
            ord.compare(&m(&[2, 1]), &m(&[1, 2])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn equal_and_mismatch() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(ord.compare(&m(&[1, 3]), &m(&[1, 3])).unwrap(), Ordering::Equal);
        assert!(matches!(
            ord.compare(&m(&[1, 3]), &m(&[1, 3, 0])),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn weighted_orders() {
        let local = MonomialOrder::Weighted(vec![-1, -2, -3]);
        assert!(local.is_local());
        // x (weight 1) beats y (weight 2) locally
        assert_eq!(
            local.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])).unwrap(),
            Ordering::Greater
        );
        assert!(MonomialOrder::Weighted(vec![1, -1]).validate(2).is_err());
        assert!(MonomialOrder::Weighted(vec![1]).validate(2).is_err());
        assert_eq!(local.ecart_degree(&m(&[1, 1, 1])), 6);
    }
}
