use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coefficient, Monomial};
use crate::error::{Error, Result};

/// Exact multivariate polynomial over `Q` in a named ring.
///
/// The term map never stores a zero coefficient, so structural equality is
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: Coefficient) -> Self {
        let mut p = Polynomial::zero(vars);
        let one = Monomial::one(p.nvars());
        p.add_term(one, c);
        p
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Polynomial::constant(vars, Coefficient::one())
    }

    /// The polynomial `c · m`.
    pub fn monomial(vars: Arc<[String]>, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Polynomial::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn var(vars: Arc<[String]>, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let m = Monomial::var(vars.len(), i);
        Ok(Polynomial::monomial(vars, m, Coefficient::one()))
    }

    pub fn from_terms(
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (Monomial, Coefficient)>,
    ) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), p.nvars(), "monomial length differs from ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree among the terms (the order of vanishing at 0).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// `Some(m)` when every term has total degree `m`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomials from different rings: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.vars == other.vars
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.derivative(i))
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[i] -= 1;
            out.add_term(dm, c * Coefficient::from_integer(BigInt::from(e)));
        }
        out
    }

    /// All first partial derivatives in ring-variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    /// Substitute `x_i ↦ c·x_i`.
    pub fn scale_variable(&self, i: usize, c: &Coefficient) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, x) in &self.terms {
            let e = m.exponents()[i] as i32;
            out.add_term(m.clone(), x * c.pow(e));
        }
        out
    }

    /// Re-express in a ring containing all of this polynomial's variables.
    pub fn embed(&self, vars: Arc<[String]>) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        let n = vars.len();
        let mut out = Polynomial::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (k, &x) in m.exponents().iter().enumerate() {
                e[map[k]] = x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Variables that actually occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    /// Keep only the terms of total degree at most `bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(self.vars.clone());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Canonical text form: terms in decreasing global degrevlex order, explicit
/// `*` between factors. The output re-parses to the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ord = super::MonomialOrder::DegRevLex;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp_monomials(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = m.display_with(&self.vars).to_string();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
