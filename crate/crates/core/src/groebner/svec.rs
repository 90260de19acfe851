//! Sorted sparse module elements used inside the completion engine.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: Coefficient,
}

/// Element of `Q[z]^k` with terms strictly decreasing in the module order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn zero() -> Self {
        SVec { terms: Vec::new() }
    }

    pub fn from_components(components: &[Polynomial], ord: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = components
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().map(move |(m, c)| Term {
                    comp,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp_terms(b.comp, &b.mono, a.comp, &a.mono));
        SVec { terms }
    }

    pub fn to_components(&self, rank: usize, vars: &Arc<[String]>) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coefficient)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(vars.clone(), b))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn ecart(&self, ord: &MonomialOrder) -> i64 {
        let lead = ord.ecart_degree(&self.lead().mono);
        self.terms
            .iter()
            .map(|t| ord.ecart_degree(&t.mono))
            .max()
            .unwrap_or(lead)
            - lead
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.terms[0].coeff.is_one() {
            return;
        }
        let inv = self.terms[0].coeff.recip();
        for t in &mut self.terms {
            t.coeff *= &inv;
        }
    }

    /// `self − c · m · other`, merging in order.
    pub fn sub_scaled(&self, c: &Coefficient, m: &Monomial, other: &SVec, ord: &MonomialOrder) -> SVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| Term {
            comp: t.comp,
            mono: t.mono.mul(m),
            coeff: -(&t.coeff * c),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.take()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(tb)) => {
                    out.push(tb);
                    next_b = b.next();
                }
                (Some(ta), Some(tb)) => match ord.cmp_terms(ta.comp, &ta.mono, tb.comp, &tb.mono) {
                    Ordering::Greater => {
                        out.push(a.next().unwrap().clone());
                        next_b = Some(tb);
                    }
                    Ordering::Less => {
                        out.push(tb);
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let ta = a.next().unwrap();
                        let sum = &ta.coeff + &tb.coeff;
                        if !sum.is_zero() {
                            out.push(Term {
                                comp: ta.comp,
                                mono: ta.mono.clone(),
                                coeff: sum,
                            });
                        }
                        next_b = b.next();
                    }
                },
            }
        }
        SVec { terms: out }
    }

    /// Cancel the lead term of `self` using `g`, whose lead divides it.
    pub fn reduce_lead_by(&self, g: &SVec, ord: &MonomialOrder) -> SVec {
        let lt = self.lead();
        let lg = g.lead();
        let m = lg.mono.quotient_of(&lt.mono);
        let c = &lt.coeff / &lg.coeff;
        self.sub_scaled(&c, &m, g, ord)
    }

    pub fn lead_divides(&self, other: &Term) -> bool {
        let l = self.lead();
        l.comp == other.comp && l.mono.divides(&other.mono)
    }

    pub fn spoly(f: &SVec, g: &SVec, ord: &MonomialOrder) -> SVec {
        let (lf, lg) = (f.lead(), g.lead());
        debug_assert_eq!(lf.comp, lg.comp);
        let lcm = lf.mono.lcm(&lg.mono);
        let mf = lf.mono.quotient_of(&lcm);
        let mg = lg.mono.quotient_of(&lcm);
        let scaled_f = SVec::zero().sub_scaled(&(-lf.coeff.recip()), &mf, f, ord);
        scaled_f.sub_scaled(&lg.coeff.recip(), &mg, g, ord)
    }

    pub fn single_component(&self) -> Option<usize> {
        let c = self.terms.first()?.comp;
        self.terms.iter().all(|t| t.comp == c).then_some(c)
    }
}
